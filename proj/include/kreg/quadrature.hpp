#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "kreg/errors.hpp"

namespace kreg {

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kQuadMaxDepth = 50;

namespace detail {

// One Simpson panel: (b-a)/6 * (f(a) + 4 f(m) + f(b)).
template <class F>
double simpson_panel(F& f, double a, double fa, double b, double fb, double& fm_out) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    fm_out = fm;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(F& f, double a, double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
    double flm, frm;
    double left = simpson_panel(f, a, fa, m, fm, flm);
    double right = simpson_panel(f, m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (!std::isfinite(delta))
        throw QuadratureError("non-finite value encountered during quadrature");
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0) {
        // At the depth cap the remaining discrepancy is accepted only when it
        // is negligible in absolute terms (stalls at jump discontinuities
        // shrink with the leaf width and end up here).
        if (std::abs(delta) <= 1e-13)
            return left + right + delta / 15.0;
        throw QuadratureError("adaptive Simpson did not reach the requested tolerance");
    }
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson integration of f over the finite interval [a, b] with
// absolute error tolerance abs_tol.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = kDefaultQuadTol,
                 int max_depth = kQuadMaxDepth) {
    if (!(abs_tol > 0.0)) throw ConfigError("quadrature tolerance must be positive");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw ConfigError("integrate() requires finite endpoints");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    double fa = f(a), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw QuadratureError("non-finite integrand value at interval endpoint");
    double fm;
    double whole = detail::simpson_panel(f, a, fa, b, fb, fm);
    return sign * detail::adaptive_simpson(f, a, fa, 0.5 * (a + b), fm, b, fb, whole,
                                           abs_tol, max_depth);
}

// Integral of f over (-inf, b] for integrands that decay toward -inf at
// least exponentially. Doubling shells are added until two consecutive
// shells each contribute less than a quarter of the tolerance.
template <class F>
double integrate_left_tail(F&& f, double b, double abs_tol = kDefaultQuadTol) {
    if (!(abs_tol > 0.0)) throw ConfigError("quadrature tolerance must be positive");
    double total = 0.0;
    double width = 8.0;
    double hi = b;
    int consecutive_small = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double lo = hi - width;
        double shell = integrate(f, lo, hi, 0.25 * abs_tol);
        total += shell;
        if (std::abs(shell) < 0.25 * abs_tol) {
            if (++consecutive_small >= 2) return total;
        } else {
            consecutive_small = 0;
        }
        hi = lo;
        width *= 2.0;
    }
    throw QuadratureError("left tail integral did not converge");
}

template <class F>
double integrate_right_tail(F&& f, double a, double abs_tol = kDefaultQuadTol) {
    return integrate_left_tail([&](double u) { return f(-u); }, -a, abs_tol);
}

// Integral of f over the whole real line.
template <class F>
double integrate_line(F&& f, double abs_tol = kDefaultQuadTol) {
    return integrate_left_tail(f, 0.0, 0.5 * abs_tol) +
           integrate_right_tail(f, 0.0, 0.5 * abs_tol);
}

} // namespace kreg
