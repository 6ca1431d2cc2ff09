#pragma once

#include <cstdint>

#include "kreg/estimators.hpp"

namespace kreg {

//! An ascending sample of order statistics.
class OrderedSample {
public:
    explicit OrderedSample(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

// Empirical cdf as data: ((x_{n:1}, 1/n), ..., (x_{n:n}, n/n)).
Dataset ecdf_dataset(const OrderedSample& s);

// Inverse graph: ((1/n, x_{n:1}), ..., (n/n, x_{n:n})).
Dataset quantile_dataset(const OrderedSample& s);

// Q-Q pairing of two equal-size samples by rank.
Dataset qq_dataset(const OrderedSample& sx, const OrderedSample& sy);

// Event-count data ((t_{n:1}, 1), ..., (t_{n:n}, n)) from nonnegative event
// times. With m > 1 pooled realizations the counts are scaled to averages
// (i / m), so the fit estimates the per-realization cumulative intensity.
Dataset counting_dataset(const OrderedSample& event_times, std::size_t realizations = 1);

// Exact derivative of the telescoping GM form:
//   sum_{j>=2} (y_j - y_{j-1}) K(x - s_{j-1}).
// Nonnegative whenever the data are co-monotone. For kernels with jumps
// (rectangular) this is the a.e. derivative.
double gm_derivative(const Dataset& d, const ScaledKernel& k, double x);

enum class TrendShape { linear, logistic, step };
TrendShape trend_by_name(const std::string& name);

// Synthetic regression data: n xs uniform on [0, 10], ys = f(x) + N(0, sd^2)
// noise. Fully deterministic for a fixed seed (own generator, no library
// distributions). The co-monotone flag is computed from the realized ys.
Dataset synth_regression(TrendShape shape, std::size_t n, double noise_sd, std::uint64_t seed);

} // namespace kreg
