#pragma once

#include "kreg/estimators.hpp"

namespace kreg {

//! One pooled block of an isotonic fit: indices [begin, end) share value.
struct IsotonicBlock {
    std::size_t begin;
    std::size_t end;
    double value;
};

//! Weighted least-squares projection of a sequence onto the nondecreasing
//! cone. xs is filled by callers that isotonize a dataset; bare sequence
//! fits leave it empty.
struct IsotonicFit {
    std::vector<double> xs;
    std::vector<double> ys_iso;
    std::vector<IsotonicBlock> blocks;
};

// Pool-adjacent-violators. Empty weights means unit weights; otherwise the
// lengths must match and every weight must be positive.
IsotonicFit pava(std::span<const double> ys, std::span<const double> weights = {});

// Isotonize-then-smooth: pava on the data ys, then the estimator on the
// monotonized dataset. With GM (any kernel) or NW (log-concave kernel) the
// resulting curve is nondecreasing.
CurveSample is_pipeline(const Dataset& d, const EstimatorSpec& spec,
                        std::span<const double> grid, double tol = kDefaultQuadTol);

// Smooth-then-isotonize: the estimator on the raw data, then pava over the
// defined curve values. Undefined NW points take no part in the pooling and
// stay undefined.
CurveSample si_pipeline(const Dataset& d, const EstimatorSpec& spec,
                        std::span<const double> grid, double tol = kDefaultQuadTol);

} // namespace kreg
