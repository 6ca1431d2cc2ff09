#include "kreg/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "kreg/io.hpp"

namespace kreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGoldenRelTol = 1e-4; // relative bandwidth tolerance of the refinement

double loo_prediction(const Dataset& loo, Method method, const ScaledKernel& k, double x,
                      const CvOptions& opts, bool& undefined) {
    undefined = false;
    switch (method) {
        case Method::nw: {
            if (auto v = nw_eval(loo, k, x)) return *v;
            if (opts.nw_policy == NwUndefinedPolicy::mean_fallback) {
                double sum = std::accumulate(loo.ys().begin(), loo.ys().end(), 0.0);
                return sum / static_cast<double>(loo.size());
            }
            undefined = true;
            return 0.0;
        }
        case Method::pc: {
            // The x0 convention re-resolves against the reduced dataset: the
            // sentinel becomes (smallest retained x) - h.
            double x0 = opts.pc_x0 ? *opts.pc_x0 : loo.x(0) - k.bandwidth();
            if (x0 > loo.x(0))
                throw ConfigError("cw: pc_x0 exceeds the smallest retained x");
            return pc_eval(loo, k, x0, x);
        }
        case Method::gm:
            return gm_eval(loo, k, x, opts.tol);
    }
    throw ConfigError("cw: unknown estimator");
}

} // namespace

double cw(const Dataset& d, Method method, const Kernel& mother, double h,
          const CvOptions& opts) {
    if (d.size() < 2) throw ConfigError("cw requires at least two data pairs");
    if (!(h > 0.0)) throw ConfigError("cw requires a positive bandwidth");
    ScaledKernel k = scale(mother, h);
    double total = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
        Dataset loo = d.leave_out(j);
        bool undefined = false;
        double pred = loo_prediction(loo, method, k, d.x(j), opts, undefined);
        if (undefined) return kInf; // never a partial sum
        double r = d.y(j) - pred;
        total += r * r;
    }
    return total;
}

std::pair<double, double> default_h_range(const Dataset& d) {
    double span = d.x_span();
    if (!(span > 0.0))
        throw ConfigError("default_h_range requires at least two distinct x values");
    return {span / (2.0 * static_cast<double>(d.size())), 2.0 * span};
}

CvProfile minimize_cw(const Dataset& d, Method method, const Kernel& mother, double h_lo,
                      double h_hi, int grid_points, const CvOptions& opts) {
    if (!(h_lo > 0.0) || !(h_lo < h_hi))
        throw ConfigError("minimize_cw requires 0 < h_lo < h_hi");
    if (grid_points < 8) throw ConfigError("minimize_cw requires at least 8 grid points");

    CvProfile p;
    p.hs.resize(grid_points);
    p.cw.resize(grid_points);
    double log_lo = std::log(h_lo), log_hi = std::log(h_hi);
    for (int i = 0; i < grid_points; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        p.hs[i] = std::exp(log_lo + t * (log_hi - log_lo));
        p.cw[i] = cw(d, method, mother, p.hs[i], opts);
    }

    int best = -1;
    for (int i = 0; i < grid_points; ++i)
        if (std::isfinite(p.cw[i]) && (best < 0 || p.cw[i] < p.cw[best])) best = i;
    if (best < 0)
        throw AllInfiniteCvError("CW is +inf over the whole bandwidth grid; "
                                 "enlarge the bandwidth range");

    // Golden-section refinement on log h inside the bracketing interval of
    // the grid argmin. Infinite values are handled by the comparisons.
    double a = std::log(p.hs[std::max(best - 1, 0)]);
    double b = std::log(p.hs[std::min(best + 1, grid_points - 1)]);
    double best_h = p.hs[best], best_cw = p.cw[best];
    auto consider = [&](double log_h) {
        double h = std::exp(log_h);
        double v = cw(d, method, mother, h, opts);
        if (v < best_cw) {
            best_cw = v;
            best_h = h;
        }
        return v;
    };
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = consider(x1), f2 = consider(x2);
    while (b - a > std::log1p(kGoldenRelTol)) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = consider(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = consider(x2);
        }
    }

    p.h_star = best_h;
    p.cw_star = best_cw;
    return p;
}

std::string profile_to_csv(const CvProfile& p) {
    std::ostringstream out;
    out << "h,cw\n";
    for (std::size_t i = 0; i < p.hs.size(); ++i)
        out << format_double(p.hs[i]) << ',' << format_double(p.cw[i]) << '\n';
    out << "h_star,cw_star\n";
    out << format_double(p.h_star) << ',' << format_double(p.cw_star) << '\n';
    return out.str();
}

} // namespace kreg
