#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lumilink/case_spec.hpp"
#include "lumilink/link.hpp"
#include "lumilink/optimizer.hpp"
#include "lumilink/params.hpp"

namespace lumilink {

struct UniformRange {
    double min = 0.0;
    double max = 0.0;
    friend bool operator==(const UniformRange&, const UniformRange&) = default;
};

/// A fixed distance, a list of fixed distances swept one after another, or a
/// uniform draw per trial.
using DistancePolicy = std::variant<double, std::vector<double>, UniformRange>;

/// Parses "M", "a,b,c" or "min:max". Throws ConfigError.
DistancePolicy parse_distance_policy(const std::string& text);
std::string to_string(const DistancePolicy& policy);

struct ExperimentConfig {
    std::vector<CaseSpec> cases = {case_from_index(1), case_from_index(2), case_from_index(3),
                                   case_from_index(4)};
    int n_blocks = 20;
    int n_trials = 500;
    DistancePolicy d_r = UniformRange{0.0, 2.0};
    DistancePolicy d_u = UniformRange{4.0, 8.0};
    double f_c = 2.4e9;
    std::uint64_t seed = 1;
    /// Blocks averaged for steady state, counted from the end; 0 means
    /// ceil(n_blocks / 2).
    int steady_blocks = 0;
    /// Worker threads for trials; 0 picks hardware concurrency. Results do not
    /// depend on it.
    int threads = 0;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::vector<std::string> validate(const ExperimentConfig& config);

/// Random inputs of one trial, shared by every case (common random numbers).
struct TrialDraw {
    double d_r = 0.0;
    double d_u = 0.0;
    std::vector<double> h_rf_sq;  ///< one fading draw per block
};

/// Draws a trial's geometry and fading from its stream. Two uniforms are
/// always consumed for the geometry (even for fixed distances) before the
/// per-block fading, so every setting of a sweep sees the same fading.
TrialDraw draw_trial(const DistancePolicy& d_r, const DistancePolicy& d_u, int n_blocks,
                     RandomStream& rng);

struct TrialResult {
    std::vector<BlockDecision> blocks;
    double rate_mean = 0.0;   ///< steady-state mean of r_e2e
    double ib_mean = 0.0;     ///< steady-state mean of i_b
    double tvlc_mean = 0.0;   ///< steady-state mean of t_vlc
    double outage_frac = 0.0; ///< share of all blocks with feasible = false
};

int steady_block_count(const ExperimentConfig& config);

/// Runs the block sequence of one trial. With carry-over on, each block starts
/// from the previous block's e2_next; block 1 starts from zero.
TrialResult run_trial(const CaseSpec& spec, const TrialDraw& draw, const ExperimentConfig& config,
                      const SystemParams& params, const SolverSettings& settings);

struct AggregateRow {
    int case_index = 1;
    std::string d_r;  ///< distance setting as written in the policy syntax
    std::string d_u;
    double f_c = 0.0;
    double rate_mean = 0.0;
    double rate_se = 0.0;
    double ib_mean = 0.0;
    double tvlc_mean = 0.0;
    double outage_frac = 0.0;
    int n_trials = 0;
    /// Per-trial steady-state rates, index-aligned across rows of the same
    /// run (used for paired comparisons; not written to CSV).
    std::vector<double> trial_rates;
};

struct ExperimentTable {
    std::vector<AggregateRow> rows;
};

/// Expands list policies into settings and runs every (d_r, d_u, case)
/// combination. Row order: d_r setting, then d_u setting, then case order.
ExperimentTable run_experiment(const ExperimentConfig& config, const SystemParams& params,
                               const SolverSettings& settings);

/// Random scenarios for comparing optimize_block against the grid oracle.
struct OracleCheckConfig {
    int n = 100;
    int grid = 201;
    std::uint64_t seed = 1;
    std::vector<CaseSpec> cases = {case_from_index(1), case_from_index(2), case_from_index(3),
                                   case_from_index(4)};
    UniformRange d_r{0.0, 2.0};
    UniformRange d_u{4.0, 8.0};
    std::vector<double> carriers = {2.4e9, 5.0e9};
};

struct OracleCheckEntry {
    Scenario scenario;
    double e2_prev = 0.0;  ///< banked energy offered to carry-over cases, J
    int case_index = 1;
    double optimizer_rate = 0.0;
    double oracle_rate = 0.0;
    double gap = 0.0;  ///< (oracle - optimizer) / oracle
    bool feasible = true;
};

struct OracleCheckReport {
    std::vector<OracleCheckEntry> entries;
    double max_gap = 0.0;
    double mean_gap = 0.0;
    /// Largest relative decrease of phi between consecutive MM iterates.
    double worst_mm_drop = 0.0;
    int max_mm_iterations = 0;
    bool all_mm_converged = true;
    /// Largest relative decrease of phi between alternation cycles.
    double worst_cycle_drop = 0.0;
};

/// Scenario k uses carrier carriers[k % size], geometry and fading from
/// sub-stream k, and a banked energy equal to the RF-phase harvest of a
/// uniformly drawn previous split.
OracleCheckReport run_oracle_check(const OracleCheckConfig& config, const SystemParams& params,
                                   const SolverSettings& settings);

}  // namespace lumilink
