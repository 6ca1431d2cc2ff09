#include "kreg/applications.hpp"

#include <algorithm>
#include <cmath>

namespace kreg {

OrderedSample::OrderedSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw ConfigError("ordered sample: at least one value required");
    for (double v : values_)
        if (!std::isfinite(v)) throw ConfigError("ordered sample: non-finite value");
    std::sort(values_.begin(), values_.end());
}

Dataset ecdf_dataset(const OrderedSample& s) {
    std::size_t n = s.size();
    std::vector<double> xs(s.values().begin(), s.values().end());
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    return Dataset(std::move(xs), std::move(ys));
}

Dataset quantile_dataset(const OrderedSample& s) {
    std::size_t n = s.size();
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    std::vector<double> ys(s.values().begin(), s.values().end());
    return Dataset(std::move(xs), std::move(ys));
}

Dataset qq_dataset(const OrderedSample& sx, const OrderedSample& sy) {
    if (sx.size() != sy.size())
        throw ConfigError("qq_dataset requires samples of equal size");
    std::vector<double> xs(sx.values().begin(), sx.values().end());
    std::vector<double> ys(sy.values().begin(), sy.values().end());
    return Dataset(std::move(xs), std::move(ys));
}

Dataset counting_dataset(const OrderedSample& event_times, std::size_t realizations) {
    if (realizations < 1) throw ConfigError("counting_dataset: realizations must be >= 1");
    if (event_times[0] < 0.0)
        throw ConfigError("counting_dataset: event times must be nonnegative");
    std::size_t n = event_times.size();
    std::vector<double> xs(event_times.values().begin(), event_times.values().end());
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = static_cast<double>(i + 1) / static_cast<double>(realizations);
    return Dataset(std::move(xs), std::move(ys));
}

double gm_derivative(const Dataset& d, const ScaledKernel& k, double x) {
    double v = 0.0;
    for (std::size_t j = 1; j < d.size(); ++j) {
        double dy = d.y(j) - d.y(j - 1);
        if (dy != 0.0) {
            double s = 0.5 * (d.x(j - 1) + d.x(j));
            v += dy * k.pdf(x - s);
        }
    }
    return v;
}

TrendShape trend_by_name(const std::string& name) {
    if (name == "linear") return TrendShape::linear;
    if (name == "logistic") return TrendShape::logistic;
    if (name == "step") return TrendShape::step;
    throw ParseError("unknown trend '" + name + "' (expected linear, logistic, or step)");
}

namespace {

// splitmix64; the full generator state is one 64-bit word.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Marsaglia polar method; trigonometry-free and platform-stable.
    double normal() {
        for (;;) {
            double a = 2.0 * uniform01() - 1.0;
            double b = 2.0 * uniform01() - 1.0;
            double s = a * a + b * b;
            if (s > 0.0 && s < 1.0) return a * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
};

double trend_value(TrendShape shape, double x) {
    switch (shape) {
        case TrendShape::linear: return x;
        case TrendShape::logistic: return 10.0 / (1.0 + std::exp(-(x - 5.0)));
        case TrendShape::step: return x < 5.0 ? 0.0 : 5.0;
    }
    return 0.0;
}

} // namespace

Dataset synth_regression(TrendShape shape, std::size_t n, double noise_sd, std::uint64_t seed) {
    if (n < 1) throw ConfigError("synth_regression: n must be >= 1");
    if (!(noise_sd >= 0.0)) throw ConfigError("synth_regression: noise_sd must be >= 0");
    SplitMix64 rng{seed};
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = 10.0 * rng.uniform01();
    for (std::size_t i = 0; i < n; ++i) {
        ys[i] = trend_value(shape, xs[i]);
        if (noise_sd > 0.0) ys[i] += noise_sd * rng.normal();
    }
    return Dataset(std::move(xs), std::move(ys)); // constructor sorts jointly
}

} // namespace kreg
