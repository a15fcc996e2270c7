// lumilink: bias/time-split optimization for an energy-harvesting VLC/RF relay.
//
//   lumilink optimize     one block (or a carry-over chain with fixed fading)
//   lumilink experiment   Monte Carlo presets, writes results.csv + manifest.json
//   lumilink oracle-check optimizer vs. brute-force grid on random scenarios
//
// Exit codes: 0 ok, 2 config/usage, 3 infeasible block with --strict,
// 4 oracle gap above 1 %.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lumilink/channel.hpp"
#include "lumilink/config.hpp"
#include "lumilink/error.hpp"
#include "lumilink/optimizer.hpp"
#include "lumilink/report.hpp"
#include "lumilink/sim.hpp"
#include "lumilink/version.hpp"

namespace fs = std::filesystem;
using namespace lumilink;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitOracleGap = 4;
constexpr double kOracleGapLimit = 0.01;

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::string cases;
    std::optional<int> blocks;
    std::optional<int> trials;
    std::optional<double> f_c;
    std::string d_r;
    std::string d_u;
    std::optional<int> threads;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<CaseSpec> parse_cases(const std::string& text) {
    std::vector<CaseSpec> cases;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            cases.push_back(case_from_index(std::stoi(item)));
        } catch (const std::logic_error&) {
            throw ConfigError("--cases: not a case number: \"" + item + "\"");
        }
    }
    if (cases.empty()) throw ConfigError("--cases: empty list");
    return cases;
}

std::optional<std::uint64_t> env_seed() {
    const char* text = std::getenv("LUMILINK_SEED");
    if (!text || !*text) return std::nullopt;
    char* end = nullptr;
    const auto value = std::strtoull(text, &end, 10);
    if (*end != '\0') throw ConfigError("LUMILINK_SEED is not an unsigned integer");
    return value;
}

// Precedence, lowest first: built-in/preset defaults, LUMILINK_SEED, config
// file, command-line flags.
RunConfig resolve_config(const CommonOptions& opt, RunConfig base) {
    if (auto s = env_seed()) base.experiment.seed = *s;
    RunConfig config = opt.config_path.empty() ? base : load_run_config(opt.config_path, base);
    auto& e = config.experiment;
    if (opt.seed) e.seed = *opt.seed;
    if (!opt.cases.empty()) e.cases = parse_cases(opt.cases);
    if (opt.blocks) e.n_blocks = *opt.blocks;
    if (opt.trials) e.n_trials = *opt.trials;
    if (opt.f_c) e.f_c = *opt.f_c;
    if (!opt.d_r.empty()) e.d_r = parse_distance_policy(opt.d_r);
    if (!opt.d_u.empty()) e.d_u = parse_distance_policy(opt.d_u);
    if (opt.threads) e.threads = *opt.threads;
    for (const auto& errors : {validate(config.params), validate(config.solver), validate(e)}) {
        if (!errors.empty()) throw ConfigError(errors.front());
    }
    return config;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << contents;
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config or manifest");
    cmd->add_option("--seed", opt.seed, "random seed (falls back to LUMILINK_SEED)");
    cmd->add_option("--cases", opt.cases, "comma-separated case numbers, e.g. 1,2,3,4");
    cmd->add_option("--fc", opt.f_c, "RF carrier frequency, Hz");
    cmd->add_option("--d-r", opt.d_r, "relay distance: M, min:max or a,b,c (m)");
    cmd->add_option("--d-u", opt.d_u, "user distance: M, min:max or a,b,c (m)");
}

double single_distance(const DistancePolicy& policy, const char* name) {
    if (const auto* fixed = std::get_if<double>(&policy)) return *fixed;
    throw ConfigError(std::string("optimize needs a single value for ") + name);
}

int cmd_optimize(const CommonOptions& opt, int case_number, std::optional<double> h2,
                 double e2_prev, bool strict) {
    RunConfig base;
    base.experiment.d_r = 0.0;
    base.experiment.d_u = 4.0;
    base.experiment.n_blocks = 1;
    const RunConfig config = resolve_config(opt, base);
    const CaseSpec spec = case_from_index(case_number);
    const double d_r = single_distance(config.experiment.d_r, "--d-r");
    const double d_u = single_distance(config.experiment.d_u, "--d-u");

    auto rng = RandomStream::derive(config.experiment.seed, streams::kTrial, 0);
    BlockState state{e2_prev};
    OptimizeOutcome outcome;
    Scenario scenario{d_r, d_u, config.experiment.f_c, 1.0};
    for (int b = 0; b < config.experiment.n_blocks; ++b) {
        scenario.h_rf_sq = h2 ? *h2 : sample_fading(rng);
        const ChannelState ch = build_channel(scenario, config.params);
        outcome = optimize_block(spec, state, ch, config.params, config.solver);
        state.e2_prev = spec.carryover == Carryover::on ? outcome.decision.e2_next : 0.0;
    }

    std::cout << "case " << case_number << " (" << describe(spec) << "), d_r = " << format_double(d_r)
              << " m, d_u = " << format_double(d_u) << " m, f_c = " << format_double(scenario.f_c)
              << " Hz, |h|^2 = " << format_double(scenario.h_rf_sq)
              << ", block " << config.experiment.n_blocks << "\n"
              << format_outcome(outcome);

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        const auto& d = outcome.decision;
        int mm_iterations = 0;
        for (const auto& t : outcome.mm_traces) mm_iterations += t.iterations;
        std::string csv =
            "case,d_r,d_u,f_c,h_rf_sq,i_b,t_vlc,amp,e_h,r_vlc,r_rf,r_e2e,feasible,mm_iterations,cycles\r\n";
        csv += std::to_string(case_number) + ',' + format_double(d_r) + ',' + format_double(d_u) + ',' +
               format_double(scenario.f_c) + ',' + format_double(scenario.h_rf_sq) + ',' +
               format_double(d.i_b) + ',' + format_double(d.t_vlc) + ',' + format_double(d.amp) + ',' +
               format_double(d.e_h) + ',' + format_double(d.r_vlc) + ',' + format_double(d.r_rf) + ',' +
               format_double(d.r_e2e) + ',' + (d.feasible ? "1" : "0") + ',' + std::to_string(mm_iterations) +
               ',' + std::to_string(outcome.cycles) + "\r\n";
        write_file(fs::path(opt.out_dir) / "optimize.csv", csv);
        write_file(fs::path(opt.out_dir) / "manifest.json",
                   dump_manifest(config, {std::string(kVersion), utc_timestamp(), "optimize", ""}));
    }
    if (strict && !outcome.decision.feasible) {
        std::cerr << "RF rate threshold not met\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

int cmd_experiment(const CommonOptions& opt, const std::string& preset) {
    RunConfig base;
    if (preset == "sweep-du") {
        base.experiment.d_r = 0.0;
        base.experiment.d_u = std::vector<double>{4.0, 5.0, 6.0, 7.0, 8.0};
    } else if (preset == "random-du") {
        base.experiment.d_r = std::vector<double>{0.0, 2.0};
        base.experiment.d_u = UniformRange{4.0, 8.0};
    } else if (!preset.empty()) {
        throw ConfigError("unknown preset \"" + preset + "\" (expected sweep-du or random-du)");
    }
    const RunConfig config = resolve_config(opt, base);
    const auto table = run_experiment(config.experiment, config.params, config.solver);
    const std::string csv = format_results_csv(table);

    const fs::path out = opt.out_dir.empty() ? fs::path(".") : fs::path(opt.out_dir);
    fs::create_directories(out);
    write_file(out / "results.csv", csv);
    write_file(out / "manifest.json",
               dump_manifest(config, {std::string(kVersion), utc_timestamp(), "experiment", preset}));
    std::cout << csv;
    std::cerr << "wrote " << (out / "results.csv").string() << " and " << (out / "manifest.json").string()
              << "\n";
    return kExitOk;
}

int cmd_oracle_check(const CommonOptions& opt, int n, std::optional<int> grid) {
    const RunConfig config = resolve_config(opt, RunConfig{});
    OracleCheckConfig check;
    check.n = n;
    check.grid = grid ? *grid : config.solver.oracle_grid;
    check.seed = config.experiment.seed;
    check.cases = config.experiment.cases;
    if (!opt.f_c.has_value()) {
        check.carriers = {2.4e9, 5.0e9};
    } else {
        check.carriers = {*opt.f_c};
    }
    if (const auto* r = std::get_if<UniformRange>(&config.experiment.d_r)) check.d_r = *r;
    if (const auto* r = std::get_if<UniformRange>(&config.experiment.d_u)) check.d_u = *r;

    const auto report = run_oracle_check(check, config.params, config.solver);
    std::cout << "scenarios        : " << check.n << " x " << check.cases.size() << " cases\n"
              << "oracle grid      : " << check.grid << "\n"
              << "max relative gap : " << format_double(report.max_gap) << "\n"
              << "mean relative gap: " << format_double(report.mean_gap) << "\n"
              << "max MM iterations: " << report.max_mm_iterations << "\n"
              << "worst MM drop    : " << format_double(report.worst_mm_drop) << "\n";

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        std::string csv = "scenario,case,d_r,d_u,f_c,h_rf_sq,e2_prev,optimizer_rate,oracle_rate,gap,feasible\r\n";
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            const auto& e = report.entries[i];
            csv += std::to_string(i / check.cases.size()) + ',' + std::to_string(e.case_index) + ',' +
                   format_double(e.scenario.d_r) + ',' + format_double(e.scenario.d_u) + ',' +
                   format_double(e.scenario.f_c) + ',' + format_double(e.scenario.h_rf_sq) + ',' +
                   format_double(e.e2_prev) + ',' + format_double(e.optimizer_rate) + ',' +
                   format_double(e.oracle_rate) + ',' + format_double(e.gap) + ',' + (e.feasible ? "1" : "0") +
                   "\r\n";
        }
        write_file(fs::path(opt.out_dir) / "oracle.csv", csv);
        write_file(fs::path(opt.out_dir) / "manifest.json",
                   dump_manifest(config, {std::string(kVersion), utc_timestamp(), "oracle-check", ""}));
    }
    if (report.max_gap > kOracleGapLimit) {
        std::cerr << "optimizer trails the oracle by more than 1 %\n";
        return kExitOracleGap;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bias and time-split optimization for an energy-harvesting VLC/RF relay link"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    CommonOptions opt_optimize, opt_experiment, opt_oracle;

    auto* optimize = app.add_subcommand("optimize", "optimize one transmission block");
    add_common(optimize, opt_optimize);
    int case_number = 1;
    std::optional<double> h2;
    double e2_prev = 0.0;
    bool strict = false;
    optimize->add_option("--case", case_number, "case number 1..4")->check(CLI::Range(1, 4));
    optimize->add_option("--h2", h2, "fixed fading power gain |h|^2 (default: drawn from the seed)");
    optimize->add_option("--e2-prev", e2_prev, "energy banked from the previous block, J")
        ->check(CLI::NonNegativeNumber);
    optimize->add_option("--blocks", opt_optimize.blocks, "run a carry-over chain of N blocks, report the last");
    optimize->add_option("--out", opt_optimize.out_dir, "write optimize.csv and manifest.json here");
    optimize->add_flag("--strict", strict, "exit 3 if the RF threshold cannot be met");

    auto* experiment = app.add_subcommand("experiment", "run a Monte Carlo experiment");
    add_common(experiment, opt_experiment);
    std::string preset;
    experiment->add_option("preset", preset, "sweep-du or random-du (omit to use the config as is)")
        ->check(CLI::IsMember({"sweep-du", "random-du"}));
    experiment->add_option("--blocks", opt_experiment.blocks, "blocks per trial");
    experiment->add_option("--trials", opt_experiment.trials, "trials per setting");
    experiment->add_option("--threads", opt_experiment.threads, "worker threads (0 = all cores)");
    experiment->add_option("--out", opt_experiment.out_dir, "output directory (default .)");

    auto* oracle = app.add_subcommand("oracle-check", "compare the optimizer with a brute-force grid");
    add_common(oracle, opt_oracle);
    int n = 100;
    std::optional<int> grid;
    oracle->add_option("--n", n, "number of random scenarios")->check(CLI::PositiveNumber);
    oracle->add_option("--grid", grid, "grid points per axis")->check(CLI::Range(3, 100000));
    oracle->add_option("--out", opt_oracle.out_dir, "write oracle.csv and manifest.json here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*optimize) return cmd_optimize(opt_optimize, case_number, h2, e2_prev, strict);
        if (*experiment) return cmd_experiment(opt_experiment, preset);
        if (*oracle) return cmd_oracle_check(opt_oracle, n, grid);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
