#include "kreg/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kreg {

MonotonicityReport check_monotone(const CurveSample& c, double tol) {
    if (!(tol >= 0.0)) throw ConfigError("check_monotone: tolerance must be nonnegative");
    MonotonicityReport r;
    bool have_prev = false;
    double prev_value = 0.0, prev_x = 0.0;
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        if (!c.defined[i]) continue; // undefined gaps are skipped
        if (have_prev) {
            double drop = prev_value - c.values[i];
            if (drop > r.worst_violation) {
                r.worst_violation = drop;
                r.witness = std::make_pair(prev_x, c.grid[i]);
            }
        }
        prev_value = c.values[i];
        prev_x = c.grid[i];
        have_prev = true;
    }
    r.is_nondecreasing = r.worst_violation <= tol;
    return r;
}

namespace {

constexpr double kLogConcaveSlack = 1e-12;

// Effective probe interval: the support itself when finite, otherwise
// truncated where the cdf leaves 1e-6 of tail mass.
std::pair<double, double> effective_support(const Kernel& k) {
    const Interval& s = k.support();
    auto cdf_at = [&k](double x) { return kernel_cdf(k, x, 1e-8); };
    double lo = s.lo, hi = s.hi;
    if (!s.lo_finite()) {
        double a = -1.0;
        while (cdf_at(a) > 1e-6) a *= 2.0;
        double b = s.hi_finite() ? s.hi : 1.0;
        for (int i = 0; i < 80; ++i) {
            double m = 0.5 * (a + b);
            (cdf_at(m) > 1e-6 ? b : a) = m;
        }
        lo = a;
    }
    if (!s.hi_finite()) {
        double b = 1.0;
        while (cdf_at(b) < 1.0 - 1e-6) b *= 2.0;
        double a = std::max(lo, -1.0);
        for (int i = 0; i < 80; ++i) {
            double m = 0.5 * (a + b);
            (cdf_at(m) < 1.0 - 1e-6 ? a : b) = m;
        }
        hi = b;
    }
    return {lo, hi};
}

} // namespace

LogConcavityReport check_log_concave(const Kernel& k, std::size_t probes) {
    if (probes < 2) throw ConfigError("check_log_concave requires at least 2 probes");
    auto [lo, hi] = effective_support(k);

    // R2 low-discrepancy sequence over the (u, v) square; deterministic.
    const double a1 = 0.7548776662466927; // 1/plastic
    const double a2 = 0.5698402909980532; // 1/plastic^2
    LogConcavityReport report;
    double worst_ratio = 1.0;
    double t1 = 0.5, t2 = 0.5;
    for (std::size_t i = 0; i < probes; ++i) {
        t1 += a1;
        t1 -= std::floor(t1);
        t2 += a2;
        t2 -= std::floor(t2);
        double u = lo + (hi - lo) * t1;
        double v = lo + (hi - lo) * t2;
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        double mid = 0.5 * (u + v);
        double mid_sq = k.pdf(mid) * k.pdf(mid);
        double prod = k.pdf(u) * k.pdf(v);
        if (mid_sq < prod * (1.0 - kLogConcaveSlack)) {
            report.passed = false;
            double ratio = prod / (mid_sq > 0.0 ? mid_sq
                                                : std::numeric_limits<double>::min());
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                report.witness = LogConcavityWitness{u, v, mid, mid_sq, prod};
            }
        }
    }
    return report;
}

std::optional<NwViolation> find_nw_violation(const Kernel& k) {
    LogConcavityReport lc = check_log_concave(k);
    if (lc.passed)
        throw ConfigError("find_nw_violation: kernel passed the log-concavity probe");
    const LogConcavityWitness& w = *lc.witness;

    // Two points with unit y-step; the midpoint inequality failure makes the
    // NW estimate drop between mid(u, v) and v.
    Dataset data({0.0, 0.5 * (w.v - w.u)}, {0.0, 1.0});
    ScaledKernel unit = scale(k, 1.0);
    double x = 0.5 * (w.u + w.v);
    double z = w.v;
    auto fx = nw_eval(data, unit, x);
    auto fz = nw_eval(data, unit, z);
    if (!fx || !fz) return std::nullopt;
    if (!(*fz < *fx - 1e-9)) return std::nullopt;
    return NwViolation{std::move(data), 1.0, x, z, *fx, *fz};
}

std::optional<PcViolationWitness> find_pc_violation(const Dataset& d, const ScaledKernel& k,
                                                    double x0) {
    if (!d.comonotone())
        throw ConfigError("find_pc_violation requires co-monotone data");
    if (x0 > d.x(0)) throw ConfigError("find_pc_violation: x0 must not exceed x_1");
    bool nontrivial = false;
    double prev = x0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.y(i) * (d.x(i) - prev) != 0.0) nontrivial = true;
        prev = d.x(i);
    }
    if (!nontrivial)
        throw ConfigError("find_pc_violation requires nontrivial data "
                          "(some y_i (x_i - x_{i-1}) != 0)");

    const int points_per_pass = 4096;
    const int max_passes = 6;
    double mid = 0.5 * (d.x(0) + d.x(d.size() - 1));
    double half0 = 0.5 * d.x_span() + 8.0 * k.bandwidth();
    for (int pass = 0; pass < max_passes; ++pass) {
        double half = half0 * static_cast<double>(1 << pass);
        double prev_x = mid - half;
        double prev_v = pc_eval(d, k, x0, prev_x);
        for (int i = 1; i < points_per_pass; ++i) {
            double x = mid - half + 2.0 * half * i / (points_per_pass - 1);
            double v = pc_eval(d, k, x0, x);
            if (v < prev_v - 1e-12)
                return PcViolationWitness{prev_x, x, prev_v, v};
            prev_x = x;
            prev_v = v;
        }
    }
    return std::nullopt; // search budget exhausted; no claim of monotonicity
}

double check_shift_preservation(const Dataset& d, const EstimatorSpec& spec, double c,
                                std::span<const double> grid, double tol) {
    CurveSample base = eval_grid(d, spec, grid, tol);
    CurveSample moved = eval_grid(d.shifted(c), spec, grid, tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!base.defined[i] || !moved.defined[i]) continue;
        worst = std::max(worst, std::abs(moved.values[i] - (base.values[i] + c)));
    }
    return worst;
}

} // namespace kreg
