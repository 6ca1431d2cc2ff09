#include "kreg/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kreg {

namespace {
constexpr double kNwDenominatorFloor = 1e-300; // below this the ratio is treated as undefined
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
} // namespace

Method method_by_name(const std::string& name) {
    if (name == "nw") return Method::nw;
    if (name == "pc") return Method::pc;
    if (name == "gm") return Method::gm;
    throw ParseError("unknown estimator '" + name + "' (expected nw, pc, or gm)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::nw: return "nw";
        case Method::pc: return "pc";
        case Method::gm: return "gm";
    }
    return "?";
}

double EstimatorSpec::resolve_pc_x0(const Dataset& d) const {
    if (!pc_x0) return d.x(0) - kernel.bandwidth();
    if (*pc_x0 > d.x(0))
        throw ConfigError("pc_x0 must not exceed the smallest x of the dataset");
    return *pc_x0;
}

std::optional<double> nw_eval(const Dataset& d, const ScaledKernel& k, double x) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        double w = k.pdf(x - d.x(i));
        num += d.y(i) * w;
        den += w;
    }
    if (!(den >= kNwDenominatorFloor)) return std::nullopt;
    // The ratio is a convex combination of the ys; clamping removes the
    // last-ulp rounding excursions outside [min y, max y].
    return std::clamp(num / den, d.y_min(), d.y_max());
}

double pc_eval(const Dataset& d, const ScaledKernel& k, double x0, double x) {
    if (x0 > d.x(0)) throw ConfigError("pc_eval: x0 must not exceed the smallest x");
    double sum = 0.0;
    double prev = x0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        double gap = d.x(i) - prev;
        if (gap != 0.0) sum += d.y(i) * gap * k.pdf(x - d.x(i));
        prev = d.x(i);
    }
    return sum;
}

double gm_eval(const Dataset& d, const ScaledKernel& k, double x, double tol) {
    if (!(tol > 0.0)) throw ConfigError("gm_eval: tolerance must be positive");
    double v = d.y(0);
    for (std::size_t j = 1; j < d.size(); ++j) {
        double dy = d.y(j) - d.y(j - 1);
        if (dy != 0.0) {
            double s = 0.5 * (d.x(j - 1) + d.x(j));
            v += dy * kernel_cdf(k, x - s, tol);
        }
    }
    return std::clamp(v, d.y_min(), d.y_max());
}

CurveSample eval_grid(const Dataset& d, const EstimatorSpec& spec,
                      std::span<const double> grid, double tol) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i]))
            throw ConfigError("eval_grid: grid must be strictly increasing");

    CurveSample out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.resize(grid.size(), kNaN);
    out.defined.assign(grid.size(), true);

    switch (spec.method) {
        case Method::nw:
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (auto v = nw_eval(d, spec.kernel, grid[i])) {
                    out.values[i] = *v;
                } else {
                    out.defined[i] = false;
                }
            }
            break;
        case Method::pc: {
            double x0 = spec.resolve_pc_x0(d);
            for (std::size_t i = 0; i < grid.size(); ++i)
                out.values[i] = pc_eval(d, spec.kernel, x0, grid[i]);
            break;
        }
        case Method::gm:
            for (std::size_t i = 0; i < grid.size(); ++i)
                out.values[i] = gm_eval(d, spec.kernel, grid[i], tol);
            break;
    }
    return out;
}

std::vector<double> default_grid(const Dataset& d, const ScaledKernel& k, std::size_t points) {
    if (points < 2) throw ConfigError("default_grid: at least two points required");
    Interval s = k.support();
    double width = s.is_finite() ? 0.5 * (s.hi - s.lo) : k.bandwidth();
    double lo = d.x(0) - 3.0 * width;
    double hi = d.x(d.size() - 1) + 3.0 * width;
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

} // namespace kreg
