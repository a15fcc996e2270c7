#pragma once

#include <optional>
#include <vector>

#include "lumilink/case_spec.hpp"
#include "lumilink/channel.hpp"
#include "lumilink/link.hpp"
#include "lumilink/params.hpp"

namespace lumilink {

struct MmIterate {
    double i_b;  ///< bias after this iteration, A
    double phi;  ///< surrogate-constrained objective at that bias, bit/s
};

/// Record of one majorization-minimization run over the DC bias.
struct MmTrace {
    std::vector<MmIterate> iterates;
    bool converged = false;
    int iterations = 0;
};

struct SubproblemOneResult {
    double i_b = 0.0;
    double amp = 0.0;
    double e_h = 0.0;
    double phi = 0.0;
    MmTrace trace;
};

struct SubproblemTwoResult {
    double t_vlc = 0.5;
    double phi = 0.0;
    /// The high-SNR VLC objective is non-positive for every T; t_vlc sits on
    /// the lower end of its admissible range.
    bool degenerate = false;
};

struct OptimizeOutcome {
    BlockDecision decision;
    double phi = 0.0;                ///< internal objective at the decision, bit/s
    int cycles = 0;                  ///< alternation cycles run
    std::vector<double> cycle_phi;   ///< objective after each cycle
    std::vector<MmTrace> mm_traces;
    bool ridge_improved = false;     ///< the T search beat plain alternation
    std::optional<double> oracle_gap;
};

struct OracleResult {
    double i_b = 0.0;
    double t_vlc = 0.5;
    double phi = 0.0;  ///< exact end-to-end rate at the best grid point
    bool feasible = true;
};

/// First-order expansion of the available energy around `i_b_anchor`:
///
///     g(I) = f T_vlc I ln(1 + beta I / I_0),
///     s(I) = g(a) + g'(a) (I - a) + e2_prev.
///
/// g is convex on I > 0, so s never exceeds total_harvest and touches it at the
/// anchor.
double surrogate_energy(double i_b, double i_b_anchor, double t_vlc, double e2_prev,
                        const ChannelState& ch, const SystemParams& params);

/// Bias optimization for a fixed time split.
///
/// Each MM step keeps the amplitude at I_H - I_b and the energy on the tangent
/// surrogate; the resulting max-min of a decreasing VLC rate and an increasing
/// RF rate is solved by bisection on their difference, restricted to biases
/// that meet the RF threshold. Iterates re-anchor at the new bias until it
/// moves less than `mm_tol`.
///
/// Throws InfeasibleThreshold if the RF threshold fails at I_H.
SubproblemOneResult solve_subproblem1(double t_vlc, double e2_prev, const ChannelState& ch,
                                      const SystemParams& params, const SolverSettings& settings,
                                      double i_b_init);

/// Time-split optimization for a fixed bias. The objective min(VLC, RF) is
/// concave in T; it is maximized by golden-section search over the interval
/// where the RF threshold holds.
///
/// Throws InfeasibleThreshold if no T meets the RF threshold.
SubproblemTwoResult solve_subproblem2(double i_b, double e2_prev, const ChannelState& ch,
                                      const SystemParams& params, const SolverSettings& settings);

/// Joint bias/time optimization of one block for the given case.
///
/// Blocks whose RF threshold cannot be met come back with feasible = false and
/// the rate-maximizing decision with the threshold dropped.
OptimizeOutcome optimize_block(const CaseSpec& spec, const BlockState& state, const ChannelState& ch,
                               const SystemParams& params, const SolverSettings& settings);

/// Exhaustive search of the exact end-to-end rate over a uniform grid of
/// biases on [(I_L+I_H)/2, I_H] and time fractions on [eps, 1-eps] (just 0.5
/// for fixed-split cases). Points violating the RF threshold are skipped unless
/// every point violates it.
OracleResult brute_force_oracle(const CaseSpec& spec, const BlockState& state, const ChannelState& ch,
                                const SystemParams& params, int grid);

/// Objective used internally for a candidate (bias, time split): the smaller
/// of the configured VLC objective and the exact RF rate.
double internal_objective(double i_b, double t_vlc, double e2_prev, const ChannelState& ch,
                          const SystemParams& params, const SolverSettings& settings);

}  // namespace lumilink
