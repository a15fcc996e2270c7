#include "lumilink/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lumilink/error.hpp"
#include "lumilink/search.hpp"

namespace lumilink {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double vlc_objective(double t_vlc, double amp, const ChannelState& ch, const SystemParams& p,
                     const SolverSettings& s) {
    if (s.vlc_objective == VlcObjective::exact) return vlc_rate(t_vlc, amp, ch, p);
    const double snr = ch.alpha * amp * amp;
    if (!(snr > 0.0)) return kNegInf;
    return t_vlc * p.b_vlc * std::log2(snr);
}

double rf_rate_at_full_bias(double t_vlc, double e2_prev, const ChannelState& ch, const SystemParams& p) {
    return rf_rate(1.0 - t_vlc, total_harvest(t_vlc, p.i_max, e2_prev, ch, p), ch, p);
}

// Split that maximizes the RF rate when the LED runs at full bias.
search::Maximum rf_peak_at_full_bias(double e2_prev, const ChannelState& ch, const SystemParams& p,
                                     const SolverSettings& s) {
    return search::golden_section_max(
        [&](double t) { return rf_rate_at_full_bias(t, e2_prev, ch, p); }, kMinTimeFraction,
        1.0 - kMinTimeFraction, s.line_search_tol);
}

bool threshold_attainable(const CaseSpec& spec, double e2_prev, const ChannelState& ch,
                          const SystemParams& p, const SolverSettings& s) {
    if (p.r_th <= 0.0) return true;
    if (spec.time_policy == TimePolicy::fixed_half) {
        return rf_rate_at_full_bias(0.5, e2_prev, ch, p) >= p.r_th;
    }
    return rf_peak_at_full_bias(e2_prev, ch, p, s).value >= p.r_th;
}

struct Interval {
    double lo;
    double hi;
};

// Time fractions for which a concave rate curve stays above the threshold,
// given the location of its peak.
template <class F>
Interval superlevel_interval(F&& rate, double peak, double threshold) {
    Interval iv{kMinTimeFraction, 1.0 - kMinTimeFraction};
    if (threshold <= 0.0) return iv;
    auto excess = [&](double t) { return rate(t) - threshold; };
    if (excess(iv.lo) < 0.0) iv.lo = search::nonnegative_side(search::bisect(excess, iv.lo, peak, 0.0));
    if (excess(iv.hi) < 0.0) iv.hi = search::nonnegative_side(search::bisect(excess, peak, iv.hi, 0.0));
    return iv;
}

}  // namespace

double internal_objective(double i_b, double t_vlc, double e2_prev, const ChannelState& ch,
                          const SystemParams& params, const SolverSettings& settings) {
    const double vlc = vlc_objective(t_vlc, params.i_max - i_b, ch, params, settings);
    const double rf = rf_rate(1.0 - t_vlc, total_harvest(t_vlc, i_b, e2_prev, ch, params), ch, params);
    return std::min(vlc, rf);
}

double surrogate_energy(double i_b, double i_b_anchor, double t_vlc, double e2_prev,
                        const ChannelState& ch, const SystemParams& params) {
    const double x = ch.beta * i_b_anchor / params.i_0;
    const double log_term = std::log1p(x);
    const double value = ch.f_coef * t_vlc * i_b_anchor * log_term;
    const double slope = ch.f_coef * t_vlc * (log_term + x / (1.0 + x));
    return value + slope * (i_b - i_b_anchor) + e2_prev;
}

SubproblemOneResult solve_subproblem1(double t_vlc, double e2_prev, const ChannelState& ch,
                                      const SystemParams& params, const SolverSettings& settings,
                                      double i_b_init) {
    if (!(t_vlc > 0.0 && t_vlc < 1.0)) throw DomainError("solve_subproblem1: t_vlc must lie in (0, 1)");
    const double lo = restricted_bias_min(params);
    const double hi = params.i_max;
    const double t_rf = 1.0 - t_vlc;
    const double r_th = params.r_th;

    if (rf_rate(t_rf, total_harvest(t_vlc, hi, e2_prev, ch, params), ch, params) < r_th) {
        throw InfeasibleThreshold("RF threshold unreachable at maximum bias for t_vlc = " +
                                  std::to_string(t_vlc));
    }

    SubproblemOneResult result;
    double anchor = std::clamp(i_b_init, lo, hi);

    for (int it = 0; it < settings.mm_max_iter; ++it) {
        auto energy = [&](double ib) {
            return std::max(0.0, surrogate_energy(ib, anchor, t_vlc, e2_prev, ch, params));
        };
        auto rf_at = [&](double ib) { return rf_rate(t_rf, energy(ib), ch, params); };
        auto vlc_at = [&](double ib) { return vlc_objective(t_vlc, hi - ib, ch, params, settings); };
        auto phi_at = [&](double ib) { return std::min(vlc_at(ib), rf_at(ib)); };

        // The tangent at I_H is exact there, so it always admits a feasible bias.
        if (rf_at(hi) < r_th) anchor = hi;

        double start = lo;
        if (r_th > 0.0 && rf_at(lo) < r_th) {
            start = search::nonnegative_side(
                search::bisect([&](double ib) { return rf_at(ib) - r_th; }, lo, hi, 0.0));
        }

        auto vlc_minus_rf = [&](double ib) { return vlc_at(ib) - rf_at(ib); };
        double next = start;
        if (vlc_minus_rf(start) <= 0.0) {
            next = start;
        } else if (vlc_minus_rf(hi) >= 0.0) {
            next = phi_at(hi) > phi_at(start) ? hi : start;
        } else {
            const auto br = search::bisect(vlc_minus_rf, start, hi, 0.0);
            next = phi_at(br.hi) > phi_at(br.lo) ? br.hi : br.lo;
        }

        const double phi = phi_at(next);
        result.e_h = energy(next);
        result.phi = phi;
        result.trace.iterates.push_back({next, phi});
        result.trace.iterations = it + 1;

        const double step = std::abs(next - anchor);
        anchor = next;
        if (step < settings.mm_tol) {
            result.trace.converged = true;
            break;
        }
    }

    result.i_b = anchor;
    result.amp = hi - anchor;
    return result;
}

SubproblemTwoResult solve_subproblem2(double i_b, double e2_prev, const ChannelState& ch,
                                      const SystemParams& params, const SolverSettings& settings) {
    const double amp = params.i_max - i_b;
    auto rf_at = [&](double t) {
        return rf_rate(1.0 - t, total_harvest(t, i_b, e2_prev, ch, params), ch, params);
    };
    auto vlc_at = [&](double t) { return vlc_objective(t, amp, ch, params, settings); };

    const auto peak = search::golden_section_max(rf_at, kMinTimeFraction, 1.0 - kMinTimeFraction,
                                                 settings.line_search_tol);
    if (peak.value < params.r_th) {
        throw InfeasibleThreshold("RF threshold unreachable for any time split at i_b = " +
                                  std::to_string(i_b));
    }
    const Interval iv = superlevel_interval(rf_at, peak.x, params.r_th);

    SubproblemTwoResult result;
    if (settings.vlc_objective == VlcObjective::high_snr && !(ch.alpha * amp * amp > 1.0)) {
        // log2(alpha A^2) <= 0: the VLC term only loses with more time.
        result.degenerate = true;
        result.t_vlc = iv.lo;
        result.phi = std::min(vlc_at(iv.lo), rf_at(iv.lo));
        return result;
    }

    const auto best = search::golden_section_max(
        [&](double t) { return std::min(vlc_at(t), rf_at(t)); }, iv.lo, iv.hi, settings.line_search_tol);
    result.t_vlc = best.x;
    result.phi = best.value;
    return result;
}

OptimizeOutcome optimize_block(const CaseSpec& spec, const BlockState& state, const ChannelState& ch,
                               const SystemParams& params, const SolverSettings& settings) {
    const double e2 = spec.carryover == Carryover::on ? state.e2_prev : 0.0;
    const double lo = restricted_bias_min(params);
    const double hi = params.i_max;

    const bool attainable = threshold_attainable(spec, e2, ch, params, settings);
    SystemParams p = params;
    if (!attainable) p.r_th = 0.0;

    OptimizeOutcome out;
    double ib = 0.5 * (lo + hi);
    double t = 0.5;
    double phi = kNegInf;

    if (spec.time_policy == TimePolicy::fixed_half) {
        auto r1 = solve_subproblem1(t, e2, ch, p, settings, ib);
        ib = r1.i_b;
        out.mm_traces.push_back(std::move(r1.trace));
        phi = internal_objective(ib, t, e2, ch, p, settings);
        out.cycles = 1;
        out.cycle_phi.push_back(phi);
    } else {
        double prev = kNegInf;
        for (int cycle = 1; cycle <= settings.alt_max_cycles; ++cycle) {
            SubproblemOneResult r1;
            try {
                r1 = solve_subproblem1(t, e2, ch, p, settings, ib);
            } catch (const InfeasibleThreshold&) {
                // Only the initial split can miss the threshold; restart from
                // the split that favors the RF hop most, at full bias.
                t = rf_peak_at_full_bias(e2, ch, p, settings).x;
                r1 = solve_subproblem1(t, e2, ch, p, settings, hi);
            }
            ib = r1.i_b;
            out.mm_traces.push_back(std::move(r1.trace));

            phi = internal_objective(ib, t, e2, ch, p, settings);
            const auto r2 = solve_subproblem2(ib, e2, ch, p, settings);
            if (r2.phi >= phi) {
                t = r2.t_vlc;
                phi = r2.phi;
            }
            out.cycles = cycle;
            out.cycle_phi.push_back(phi);
            if (!std::isfinite(phi)) break;
            if (cycle > 1 && phi - prev <= settings.alt_rel_tol * std::abs(phi)) break;
            prev = phi;
        }

        if (settings.ridge_search) {
            // Alternation stops as soon as both rates are balanced, which
            // happens for any split. Search the split directly, with the bias
            // re-optimized at every trial point.
            const auto peak = rf_peak_at_full_bias(e2, ch, p, settings);
            const Interval iv = superlevel_interval(
                [&](double tt) { return rf_rate_at_full_bias(tt, e2, ch, p); }, peak.x, p.r_th);
            double warm = ib;
            double best_ib = ib;
            double best_t = t;
            double best_phi = phi;
            auto ridge = [&](double tt) {
                auto r1 = solve_subproblem1(tt, e2, ch, p, settings, warm);
                warm = r1.i_b;
                const double value = internal_objective(r1.i_b, tt, e2, ch, p, settings);
                out.mm_traces.push_back(std::move(r1.trace));
                if (value > best_phi) {
                    best_phi = value;
                    best_ib = r1.i_b;
                    best_t = tt;
                }
                return value;
            };
            search::golden_section_max(ridge, iv.lo, iv.hi, settings.line_search_tol);
            if (best_phi > phi) {
                ib = best_ib;
                t = best_t;
                phi = best_phi;
                out.ridge_improved = true;
            }
        }
    }

    BlockDecision& d = out.decision;
    d.i_b = std::clamp(ib, lo, hi);
    d.amp = hi - d.i_b;
    d.t_vlc = t;
    d.t_rf = 1.0 - t;
    d.e_h = total_harvest(d.t_vlc, d.i_b, e2, ch, params);
    d.r_vlc = vlc_rate(d.t_vlc, d.amp, ch, params);
    d.r_rf = rf_rate(d.t_rf, d.e_h, ch, params);
    d.r_e2e = end_to_end_rate(d.r_vlc, d.r_rf);
    d.e2_next = spec.carryover == Carryover::on ? harvest_phase2(d.t_rf, ch, params) : 0.0;
    d.feasible = attainable && d.r_rf >= params.r_th;
    out.phi = phi;
    return out;
}

OracleResult brute_force_oracle(const CaseSpec& spec, const BlockState& state, const ChannelState& ch,
                                const SystemParams& params, int grid) {
    if (grid < 3) throw DomainError("brute_force_oracle: grid must be >= 3");
    const double e2 = spec.carryover == Carryover::on ? state.e2_prev : 0.0;
    const double lo = restricted_bias_min(params);
    const double hi = params.i_max;

    std::vector<double> splits;
    if (spec.time_policy == TimePolicy::fixed_half) {
        splits.push_back(0.5);
    } else {
        const double t0 = kMinTimeFraction;
        const double t1 = 1.0 - kMinTimeFraction;
        for (int k = 0; k < grid; ++k) splits.push_back(t0 + (t1 - t0) * k / (grid - 1));
    }

    OracleResult best_feasible{0.0, 0.0, kNegInf, true};
    OracleResult best_any{0.0, 0.0, kNegInf, false};
    for (int i = 0; i < grid; ++i) {
        const double ib = lo + (hi - lo) * i / (grid - 1);
        const double amp = hi - ib;
        for (const double t : splits) {
            const double r_vlc = vlc_rate(t, amp, ch, params);
            const double r_rf = rf_rate(1.0 - t, total_harvest(t, ib, e2, ch, params), ch, params);
            const double r = end_to_end_rate(r_vlc, r_rf);
            if (r > best_any.phi) best_any = {ib, t, r, false};
            if (r_rf >= params.r_th && r > best_feasible.phi) best_feasible = {ib, t, r, true};
        }
    }
    return best_feasible.phi > kNegInf ? best_feasible : best_any;
}

}  // namespace lumilink
