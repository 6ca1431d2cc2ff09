#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kreg/estimators.hpp"

namespace kreg {

// How a leave-one-out NW prediction with a vanishing weight sum enters the
// CW score. The default makes the whole score +inf, so bandwidths that
// cannot predict every held-out point are inadmissible. The mean fallback
// substitutes the mean of the retained ys for the missing prediction; the
// score then stays finite (and shift-consistent) for every bandwidth.
enum class NwUndefinedPolicy { infinite, mean_fallback };

//! Leave-one-out cross-validation profile over a bandwidth grid.
struct CvProfile {
    std::vector<double> hs;  // log-spaced bandwidth grid
    std::vector<double> cw;  // CW(h) values, +inf where inadmissible
    double h_star = 0.0;     // refined minimizer
    double cw_star = 0.0;    // CW at h_star
};

struct CvOptions {
    std::optional<double> pc_x0 = std::nullopt; // PC only; default resolves per fit
    double tol = kDefaultQuadTol;                // quadrature tolerance for GM fits
    NwUndefinedPolicy nw_policy = NwUndefinedPolicy::infinite;
};

// CW(h) = sum_j (y_j - fhat_{K_h}(x_j; data without pair j))^2. Requires
// n >= 2 and h > 0. Returns +inf if any leave-one-out prediction is
// undefined (under the default policy).
double cw(const Dataset& d, Method method, const Kernel& mother, double h,
          const CvOptions& opts = {});

// Evaluates CW on a log-spaced grid over [h_lo, h_hi] (grid_points >= 8),
// then refines around the grid argmin by golden-section search on log h to
// a relative bandwidth tolerance of 1e-4. Grid ties break toward smaller h.
// Throws AllInfiniteCvError when no grid bandwidth is admissible.
CvProfile minimize_cw(const Dataset& d, Method method, const Kernel& mother, double h_lo,
                      double h_hi, int grid_points = 64, const CvOptions& opts = {});

// Default search range [span/(2n), 2 span]; requires distinct x values.
std::pair<double, double> default_h_range(const Dataset& d);

// CSV rendering: header "h,cw", one row per grid point, then a summary
// header "h_star,cw_star" and its single row.
std::string profile_to_csv(const CvProfile& p);

} // namespace kreg
