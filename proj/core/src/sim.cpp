#include "lumilink/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "lumilink/channel.hpp"
#include "lumilink/error.hpp"
#include "lumilink/report.hpp"
#include "lumilink/rng.hpp"

namespace lumilink {

namespace {

double parse_number(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(value)) {
        throw ConfigError("not a number: \"" + text + "\"");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

// Settings a policy expands into: each list entry on its own, otherwise the
// policy itself.
std::vector<DistancePolicy> expand(const DistancePolicy& policy) {
    if (const auto* list = std::get_if<std::vector<double>>(&policy)) {
        std::vector<DistancePolicy> out;
        for (double v : *list) out.emplace_back(v);
        return out;
    }
    return {policy};
}

double draw_distance(const DistancePolicy& policy, double u) {
    if (const auto* fixed = std::get_if<double>(&policy)) return *fixed;
    if (const auto* range = std::get_if<UniformRange>(&policy)) return range->min + (range->max - range->min) * u;
    throw ConfigError("list distance policies must be expanded before drawing");
}

void validate_policy(std::vector<std::string>& errors, const char* name, const DistancePolicy& policy,
                     double minimum) {
    auto check = [&](double v) {
        if (!std::isfinite(v) || v < minimum) {
            errors.push_back(std::string(name) + " values must be finite and >= " + format_double(minimum));
        }
    };
    if (const auto* fixed = std::get_if<double>(&policy)) {
        check(*fixed);
    } else if (const auto* list = std::get_if<std::vector<double>>(&policy)) {
        if (list->empty()) errors.push_back(std::string(name) + " list must not be empty");
        for (double v : *list) check(v);
    } else {
        const auto& r = std::get<UniformRange>(policy);
        check(r.min);
        check(r.max);
        if (!(r.min <= r.max)) errors.push_back(std::string(name) + " range must satisfy min <= max");
    }
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, std::max(1, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

double mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double standard_error(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    const double n = static_cast<double>(xs.size());
    return std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

}  // namespace

DistancePolicy parse_distance_policy(const std::string& text) {
    if (text.empty()) throw ConfigError("empty distance specification");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 2) throw ConfigError("distance range must be min:max, got \"" + text + "\"");
        return UniformRange{parse_number(parts[0]), parse_number(parts[1])};
    }
    if (text.find(',') != std::string::npos) {
        std::vector<double> values;
        for (const auto& part : split(text, ',')) values.push_back(parse_number(part));
        return values;
    }
    return parse_number(text);
}

std::string to_string(const DistancePolicy& policy) {
    if (const auto* fixed = std::get_if<double>(&policy)) return format_double(*fixed);
    if (const auto* list = std::get_if<std::vector<double>>(&policy)) {
        std::string out;
        for (std::size_t i = 0; i < list->size(); ++i) {
            if (i) out += ',';
            out += format_double((*list)[i]);
        }
        return out;
    }
    const auto& r = std::get<UniformRange>(policy);
    return format_double(r.min) + ":" + format_double(r.max);
}

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> errors;
    if (config.cases.empty()) errors.push_back("cases must not be empty");
    if (config.n_blocks < 1) errors.push_back("n_blocks must be >= 1");
    if (config.n_trials < 1) errors.push_back("n_trials must be >= 1");
    if (config.steady_blocks < 0 || config.steady_blocks > config.n_blocks) {
        errors.push_back("steady_blocks must lie in [0, n_blocks]");
    }
    if (config.threads < 0) errors.push_back("threads must be >= 0");
    if (!(config.f_c > 0.0) || !std::isfinite(config.f_c)) errors.push_back("f_c must be finite and > 0");
    validate_policy(errors, "d_r", config.d_r, 0.0);
    validate_policy(errors, "d_u", config.d_u, 0.0);
    return errors;
}

TrialDraw draw_trial(const DistancePolicy& d_r, const DistancePolicy& d_u, int n_blocks,
                     RandomStream& rng) {
    TrialDraw draw;
    const double u_r = rng.uniform();
    const double u_u = rng.uniform();
    draw.d_r = draw_distance(d_r, u_r);
    draw.d_u = draw_distance(d_u, u_u);
    draw.h_rf_sq.reserve(static_cast<std::size_t>(n_blocks));
    for (int b = 0; b < n_blocks; ++b) draw.h_rf_sq.push_back(sample_fading(rng));
    return draw;
}

int steady_block_count(const ExperimentConfig& config) {
    if (config.steady_blocks > 0) return config.steady_blocks;
    return (config.n_blocks + 1) / 2;
}

TrialResult run_trial(const CaseSpec& spec, const TrialDraw& draw, const ExperimentConfig& config,
                      const SystemParams& params, const SolverSettings& settings) {
    TrialResult result;
    result.blocks.reserve(draw.h_rf_sq.size());
    BlockState state;
    int outages = 0;
    for (const double h2 : draw.h_rf_sq) {
        const Scenario scenario{draw.d_r, draw.d_u, config.f_c, h2};
        const ChannelState ch = build_channel(scenario, params);
        const auto outcome = optimize_block(spec, state, ch, params, settings);
        result.blocks.push_back(outcome.decision);
        if (!outcome.decision.feasible) ++outages;
        state.e2_prev = spec.carryover == Carryover::on ? outcome.decision.e2_next : 0.0;
    }

    const int n = static_cast<int>(result.blocks.size());
    const int steady = std::clamp(steady_block_count(config), 1, std::max(1, n));
    double rate = 0.0, ib = 0.0, tvlc = 0.0;
    for (int b = n - steady; b < n; ++b) {
        rate += result.blocks[b].r_e2e;
        ib += result.blocks[b].i_b;
        tvlc += result.blocks[b].t_vlc;
    }
    result.rate_mean = rate / steady;
    result.ib_mean = ib / steady;
    result.tvlc_mean = tvlc / steady;
    result.outage_frac = n > 0 ? static_cast<double>(outages) / n : 0.0;
    return result;
}

ExperimentTable run_experiment(const ExperimentConfig& config, const SystemParams& params,
                               const SolverSettings& settings) {
    for (auto errors : {validate(config), validate(params), validate(settings)}) {
        if (!errors.empty()) throw ConfigError(errors.front());
    }

    ExperimentTable table;
    const auto n_cases = config.cases.size();
    for (const auto& d_r : expand(config.d_r)) {
        for (const auto& d_u : expand(config.d_u)) {
            // results[trial][case]; filled in any order, reduced by index.
            std::vector<std::vector<TrialResult>> results(static_cast<std::size_t>(config.n_trials));
            parallel_for(config.n_trials, config.threads, [&](int trial) {
                auto rng = RandomStream::derive(config.seed, streams::kTrial, static_cast<std::uint64_t>(trial));
                const TrialDraw draw = draw_trial(d_r, d_u, config.n_blocks, rng);
                auto& row = results[static_cast<std::size_t>(trial)];
                row.reserve(n_cases);
                for (const auto& spec : config.cases) {
                    auto r = run_trial(spec, draw, config, params, settings);
                    r.blocks.clear();
                    row.push_back(std::move(r));
                }
            });

            for (std::size_t c = 0; c < n_cases; ++c) {
                AggregateRow agg;
                agg.case_index = case_index(config.cases[c]);
                agg.d_r = to_string(d_r);
                agg.d_u = to_string(d_u);
                agg.f_c = config.f_c;
                agg.n_trials = config.n_trials;
                std::vector<double> ibs, tvlcs, outages;
                for (const auto& trial : results) {
                    agg.trial_rates.push_back(trial[c].rate_mean);
                    ibs.push_back(trial[c].ib_mean);
                    tvlcs.push_back(trial[c].tvlc_mean);
                    outages.push_back(trial[c].outage_frac);
                }
                agg.rate_mean = mean(agg.trial_rates);
                agg.rate_se = standard_error(agg.trial_rates);
                agg.ib_mean = mean(ibs);
                agg.tvlc_mean = mean(tvlcs);
                agg.outage_frac = mean(outages);
                table.rows.push_back(std::move(agg));
            }
        }
    }
    return table;
}

OracleCheckReport run_oracle_check(const OracleCheckConfig& config, const SystemParams& params,
                                   const SolverSettings& settings) {
    if (config.n < 1) throw ConfigError("oracle check needs n >= 1");
    if (config.grid < 3) throw ConfigError("oracle grid must be >= 3");
    if (config.carriers.empty()) throw ConfigError("oracle check needs at least one carrier");

    OracleCheckReport report;
    double gap_sum = 0.0;
    for (int k = 0; k < config.n; ++k) {
        auto rng = RandomStream::derive(config.seed, streams::kOracleScenario, static_cast<std::uint64_t>(k));
        Scenario scenario;
        scenario.d_r = rng.uniform(config.d_r.min, config.d_r.max);
        scenario.d_u = rng.uniform(config.d_u.min, config.d_u.max);
        scenario.f_c = config.carriers[static_cast<std::size_t>(k) % config.carriers.size()];
        scenario.h_rf_sq = sample_fading(rng);
        const ChannelState ch = build_channel(scenario, params);
        const double prev_split = rng.uniform();
        const BlockState state{harvest_phase2(prev_split, ch, params)};

        for (const auto& spec : config.cases) {
            const auto outcome = optimize_block(spec, state, ch, params, settings);
            const auto oracle = brute_force_oracle(spec, state, ch, params, config.grid);

            OracleCheckEntry entry;
            entry.scenario = scenario;
            entry.e2_prev = state.e2_prev;
            entry.case_index = case_index(spec);
            entry.optimizer_rate = outcome.decision.r_e2e;
            entry.oracle_rate = oracle.phi;
            entry.gap = oracle.phi > 0.0 ? (oracle.phi - outcome.decision.r_e2e) / oracle.phi : 0.0;
            entry.feasible = outcome.decision.feasible;
            report.max_gap = report.entries.empty() ? entry.gap : std::max(report.max_gap, entry.gap);
            gap_sum += entry.gap;
            report.entries.push_back(entry);

            for (const auto& trace : outcome.mm_traces) {
                report.max_mm_iterations = std::max(report.max_mm_iterations, trace.iterations);
                report.all_mm_converged = report.all_mm_converged && trace.converged;
                for (std::size_t i = 1; i < trace.iterates.size(); ++i) {
                    const double before = trace.iterates[i - 1].phi;
                    const double after = trace.iterates[i].phi;
                    if (before > 0.0) report.worst_mm_drop = std::max(report.worst_mm_drop, (before - after) / before);
                }
            }
            for (std::size_t i = 1; i < outcome.cycle_phi.size(); ++i) {
                const double before = outcome.cycle_phi[i - 1];
                const double after = outcome.cycle_phi[i];
                if (before > 0.0) report.worst_cycle_drop = std::max(report.worst_cycle_drop, (before - after) / before);
            }
        }
    }
    report.mean_gap = gap_sum / static_cast<double>(report.entries.size());
    return report;
}

}  // namespace lumilink
