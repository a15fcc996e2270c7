#include "lumilink/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lumilink/error.hpp"

namespace lumilink {

namespace {

using nlohmann::json;

template <class T>
using FieldTable = std::map<std::string, std::function<void(T&, const json&)>>;

double as_double(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(key + ": expected a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ConfigError(key + ": expected an integer");
    return v.get<int>();
}

bool as_bool(const json& v, const std::string& key) {
    if (!v.is_boolean()) throw ConfigError(key + ": expected true or false");
    return v.get<bool>();
}

template <class T>
void apply(T& target, const json& section, const FieldTable<T>& fields, const std::string& name) {
    if (!section.is_object()) throw ConfigError(name + ": expected an object");
    for (const auto& [key, value] : section.items()) {
        const auto it = fields.find(key);
        if (it == fields.end()) throw ConfigError(name + ": unknown field \"" + key + "\"");
        it->second(target, value);
    }
}

#define LUMILINK_DOUBLE_FIELD(Type, field)                                                   \
    {                                                                                        \
        #field, [](Type& t, const json& v) { t.field = as_double(v, #field); }               \
    }

const FieldTable<SystemParams>& params_fields() {
    static const FieldTable<SystemParams> table = {
        LUMILINK_DOUBLE_FIELD(SystemParams, p_led),
        LUMILINK_DOUBLE_FIELD(SystemParams, eta),
        LUMILINK_DOUBLE_FIELD(SystemParams, i_min),
        LUMILINK_DOUBLE_FIELD(SystemParams, i_max),
        LUMILINK_DOUBLE_FIELD(SystemParams, b_vlc),
        LUMILINK_DOUBLE_FIELD(SystemParams, b_rf),
        LUMILINK_DOUBLE_FIELD(SystemParams, p0_dbm_per_hz),
        LUMILINK_DOUBLE_FIELD(SystemParams, nf_db),
        LUMILINK_DOUBLE_FIELD(SystemParams, v_t),
        LUMILINK_DOUBLE_FIELD(SystemParams, i_0),
        LUMILINK_DOUBLE_FIELD(SystemParams, q_e),
        LUMILINK_DOUBLE_FIELD(SystemParams, i_amb),
        LUMILINK_DOUBLE_FIELD(SystemParams, a_p),
        LUMILINK_DOUBLE_FIELD(SystemParams, h_delta),
        LUMILINK_DOUBLE_FIELD(SystemParams, phi_fov_deg),
        LUMILINK_DOUBLE_FIELD(SystemParams, theta_half_deg),
        LUMILINK_DOUBLE_FIELD(SystemParams, fill_factor),
        LUMILINK_DOUBLE_FIELD(SystemParams, r_th),
        LUMILINK_DOUBLE_FIELD(SystemParams, pl_exponent),
        LUMILINK_DOUBLE_FIELD(SystemParams, d0),
    };
    return table;
}

const FieldTable<SolverSettings>& solver_fields() {
    static const FieldTable<SolverSettings> table = {
        LUMILINK_DOUBLE_FIELD(SolverSettings, mm_tol),
        {"mm_max_iter", [](SolverSettings& s, const json& v) { s.mm_max_iter = as_int(v, "mm_max_iter"); }},
        LUMILINK_DOUBLE_FIELD(SolverSettings, alt_rel_tol),
        {"alt_max_cycles", [](SolverSettings& s, const json& v) { s.alt_max_cycles = as_int(v, "alt_max_cycles"); }},
        LUMILINK_DOUBLE_FIELD(SolverSettings, line_search_tol),
        {"oracle_grid", [](SolverSettings& s, const json& v) { s.oracle_grid = as_int(v, "oracle_grid"); }},
        {"vlc_objective",
         [](SolverSettings& s, const json& v) {
             if (!v.is_string()) throw ConfigError("vlc_objective: expected a string");
             s.vlc_objective = vlc_objective_from_string(v.get<std::string>());
         }},
        {"ridge_search", [](SolverSettings& s, const json& v) { s.ridge_search = as_bool(v, "ridge_search"); }},
    };
    return table;
}

#undef LUMILINK_DOUBLE_FIELD

DistancePolicy policy_from_json(const json& v, const std::string& key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array()) {
        std::vector<double> values;
        for (const auto& item : v) values.push_back(as_double(item, key));
        return values;
    }
    if (v.is_object()) {
        UniformRange range;
        bool has_min = false, has_max = false;
        for (const auto& [k, item] : v.items()) {
            if (k == "min") {
                range.min = as_double(item, key + ".min");
                has_min = true;
            } else if (k == "max") {
                range.max = as_double(item, key + ".max");
                has_max = true;
            } else {
                throw ConfigError(key + ": unknown field \"" + k + "\"");
            }
        }
        if (!has_min || !has_max) throw ConfigError(key + ": range needs both min and max");
        return range;
    }
    if (v.is_string()) return parse_distance_policy(v.get<std::string>());
    throw ConfigError(key + ": expected a number, a list or {\"min\", \"max\"}");
}

json policy_to_json(const DistancePolicy& policy) {
    if (const auto* fixed = std::get_if<double>(&policy)) return *fixed;
    if (const auto* list = std::get_if<std::vector<double>>(&policy)) return *list;
    const auto& r = std::get<UniformRange>(policy);
    return json{{"min", r.min}, {"max", r.max}};
}

const FieldTable<ExperimentConfig>& experiment_fields() {
    static const FieldTable<ExperimentConfig> table = {
        {"cases",
         [](ExperimentConfig& e, const json& v) {
             if (!v.is_array()) throw ConfigError("cases: expected a list of case numbers");
             e.cases.clear();
             for (const auto& item : v) e.cases.push_back(case_from_index(as_int(item, "cases")));
         }},
        {"n_blocks", [](ExperimentConfig& e, const json& v) { e.n_blocks = as_int(v, "n_blocks"); }},
        {"n_trials", [](ExperimentConfig& e, const json& v) { e.n_trials = as_int(v, "n_trials"); }},
        {"d_r", [](ExperimentConfig& e, const json& v) { e.d_r = policy_from_json(v, "d_r"); }},
        {"d_u", [](ExperimentConfig& e, const json& v) { e.d_u = policy_from_json(v, "d_u"); }},
        {"f_c", [](ExperimentConfig& e, const json& v) { e.f_c = as_double(v, "f_c"); }},
        {"seed",
         [](ExperimentConfig& e, const json& v) {
             if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
                 throw ConfigError("seed: expected a non-negative integer");
             }
             e.seed = v.get<std::uint64_t>();
         }},
        {"steady_blocks", [](ExperimentConfig& e, const json& v) { e.steady_blocks = as_int(v, "steady_blocks"); }},
        {"threads", [](ExperimentConfig& e, const json& v) { e.threads = as_int(v, "threads"); }},
    };
    return table;
}

json params_to_json(const SystemParams& p) {
    return json{
        {"p_led", p.p_led},
        {"eta", p.eta},
        {"i_min", p.i_min},
        {"i_max", p.i_max},
        {"b_vlc", p.b_vlc},
        {"b_rf", p.b_rf},
        {"p0_dbm_per_hz", p.p0_dbm_per_hz},
        {"nf_db", p.nf_db},
        {"v_t", p.v_t},
        {"i_0", p.i_0},
        {"q_e", p.q_e},
        {"i_amb", p.i_amb},
        {"a_p", p.a_p},
        {"h_delta", p.h_delta},
        {"phi_fov_deg", p.phi_fov_deg},
        {"theta_half_deg", p.theta_half_deg},
        {"fill_factor", p.fill_factor},
        {"r_th", p.r_th},
        {"pl_exponent", p.pl_exponent},
        {"d0", p.d0},
    };
}

json solver_to_json(const SolverSettings& s) {
    return json{
        {"mm_tol", s.mm_tol},
        {"mm_max_iter", s.mm_max_iter},
        {"alt_rel_tol", s.alt_rel_tol},
        {"alt_max_cycles", s.alt_max_cycles},
        {"line_search_tol", s.line_search_tol},
        {"oracle_grid", s.oracle_grid},
        {"vlc_objective", to_string(s.vlc_objective)},
        {"ridge_search", s.ridge_search},
    };
}

json experiment_to_json(const ExperimentConfig& e) {
    json cases = json::array();
    for (const auto& c : e.cases) cases.push_back(case_index(c));
    return json{
        {"cases", cases},
        {"n_blocks", e.n_blocks},
        {"n_trials", e.n_trials},
        {"d_r", policy_to_json(e.d_r)},
        {"d_u", policy_to_json(e.d_u)},
        {"f_c", e.f_c},
        {"seed", e.seed},
        {"steady_blocks", e.steady_blocks},
        {"threads", e.threads},
    };
}

json run_config_to_json(const RunConfig& config) {
    return json{
        {"params", params_to_json(config.params)},
        {"solver", solver_to_json(config.solver)},
        {"experiment", experiment_to_json(config.experiment)},
    };
}

void throw_if_invalid(const std::vector<std::string>& errors, const std::string& section) {
    if (errors.empty()) return;
    std::string message = section + ":";
    for (const auto& e : errors) message += " " + e + ";";
    throw ConfigError(message);
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text, const RunConfig& base) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");

    RunConfig config = base;
    try {
        for (const auto& [key, value] : root.items()) {
            if (key == "params") {
                apply(config.params, value, params_fields(), "params");
            } else if (key == "solver") {
                apply(config.solver, value, solver_fields(), "solver");
            } else if (key == "experiment") {
                apply(config.experiment, value, experiment_fields(), "experiment");
            } else if (key == "manifest") {
                // provenance only
            } else {
                throw ConfigError("unknown section \"" + key + "\"");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    throw_if_invalid(validate(config.params), "params");
    throw_if_invalid(validate(config.solver), "solver");
    throw_if_invalid(validate(config.experiment), "experiment");
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path, const RunConfig& base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str(), base);
}

std::string dump_run_config(const RunConfig& config) {
    return run_config_to_json(config).dump(2) + "\n";
}

std::string dump_manifest(const RunConfig& config, const ManifestInfo& info) {
    json root = run_config_to_json(config);
    root["manifest"] = json{
        {"tool_version", info.tool_version},
        {"timestamp", info.timestamp},
        {"command", info.command},
        {"preset", info.preset},
        {"seed", config.experiment.seed},
    };
    return root.dump(2) + "\n";
}

}  // namespace lumilink
