#pragma once

#include <optional>
#include <string>

#include "kreg/dataset.hpp"
#include "kreg/kernels.hpp"

namespace kreg {

enum class Method { nw, pc, gm };

Method method_by_name(const std::string& name);
std::string method_name(Method m);

//! Which estimator to run, with which scaled kernel. For the PC estimator,
//! pc_x0 is the artificial leftmost abscissa x_0; when absent it resolves to
//! x_1 - h against the dataset it is applied to.
struct EstimatorSpec {
    Method method;
    ScaledKernel kernel;
    std::optional<double> pc_x0 = std::nullopt;

    double resolve_pc_x0(const Dataset& d) const;
};

//! Estimator values on a strictly increasing grid. defined[i] is false where
//! the estimate does not exist; only the NW estimator produces such points.
struct CurveSample {
    std::vector<double> grid;
    std::vector<double> values; // NaN where !defined
    std::vector<bool> defined;
};

// Nadaraya-Watson estimate at x, or nullopt where the weight sum vanishes.
// A defined value always lies in [min y, max y].
std::optional<double> nw_eval(const Dataset& d, const ScaledKernel& k, double x);

// Priestley-Chao estimate at x with leftmost gap anchored at x0 <= x_1.
double pc_eval(const Dataset& d, const ScaledKernel& k, double x0, double x);

// Gasser-Muller estimate at x, computed through the telescoping form
//   y_1 + sum_{j>=2} (y_j - y_{j-1}) F(x - s_{j-1}),   s_j = (x_j + x_{j+1})/2,
// where F is the kernel distribution function evaluated at tolerance tol.
double gm_eval(const Dataset& d, const ScaledKernel& k, double x,
               double tol = kDefaultQuadTol);

CurveSample eval_grid(const Dataset& d, const EstimatorSpec& spec,
                      std::span<const double> grid, double tol = kDefaultQuadTol);

// Uniform grid covering the data range extended by three effective kernel
// widths on each side (width = h for infinite support, half the scaled
// support width otherwise).
std::vector<double> default_grid(const Dataset& d, const ScaledKernel& k, std::size_t points);

} // namespace kreg
