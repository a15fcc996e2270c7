#pragma once

#include <cmath>
#include <utility>

// One-dimensional bracketing searches used by the optimizer.
//
// Both normalize the interval so that lo < hi before iterating; passing the
// endpoints in either order gives the same answer.

namespace lumilink::search {

/// Bracket [lo, hi] with the sign change of `f` preserved.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

/// Bisection on a sign change of `f` in [a, b]. Requires f(a) and f(b) to have
/// opposite signs (zero counts as non-negative). Iterates until the bracket is
/// narrower than `tol` or no representable midpoint remains; tol = 0 runs to
/// floating-point resolution.
template <class F>
Bracket bisect(F&& f, double a, double b, double tol) {
    if (a > b) std::swap(a, b);
    double fa = f(a);
    double fb = f(b);
    const bool a_nonneg = fa >= 0.0;
    for (int it = 0; it < 2000 && (b - a) > tol; ++it) {
        const double mid = a + 0.5 * (b - a);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if ((fm >= 0.0) == a_nonneg) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    return {a, b, fa, fb};
}

/// Endpoint of the bracket where f >= 0.
inline double nonnegative_side(const Bracket& br) { return br.f_lo >= 0.0 ? br.lo : br.hi; }

struct Maximum {
    double x;
    double value;
};

/// Golden-section search for the maximum of a unimodal `f` on [a, b]. Returns
/// the best point evaluated (endpoints included), so the reported value is an
/// actual function value and never an interpolation.
template <class F>
Maximum golden_section_max(F&& f, double a, double b, double tol) {
    if (a > b) std::swap(a, b);
    constexpr double kInvPhi = 0.6180339887498949;
    Maximum best{a, f(a)};
    auto consider = [&best](double x, double v) {
        if (v > best.value || (v == best.value && x < best.x)) best = {x, v};
    };
    consider(b, f(b));
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    consider(c, fc);
    consider(d, fd);
    for (int it = 0; it < 500 && (b - a) > tol; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
            consider(d, fd);
        }
    }
    return best;
}

}  // namespace lumilink::search
