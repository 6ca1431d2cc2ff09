#include "kreg/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kreg {

Dataset::Dataset(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size()) throw ConfigError("dataset: xs and ys lengths differ");
    if (xs_.empty()) throw ConfigError("dataset: at least one pair is required");
    for (std::size_t i = 0; i < xs_.size(); ++i)
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
            throw ConfigError("dataset: non-finite value at index " + std::to_string(i));

    if (!std::is_sorted(xs_.begin(), xs_.end())) {
        std::vector<std::size_t> order(xs_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [this](std::size_t a, std::size_t b) { return xs_[a] < xs_[b]; });
        std::vector<double> sx(xs_.size()), sy(ys_.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sx[i] = xs_[order[i]];
            sy[i] = ys_[order[i]];
        }
        xs_ = std::move(sx);
        ys_ = std::move(sy);
    }

    comonotone_ = std::is_sorted(ys_.begin(), ys_.end());
    auto [lo, hi] = std::minmax_element(ys_.begin(), ys_.end());
    y_min_ = *lo;
    y_max_ = *hi;
}

Dataset Dataset::leave_out(std::size_t j) const {
    if (j >= xs_.size()) throw ConfigError("dataset: leave_out index out of range");
    if (xs_.size() < 2) throw ConfigError("dataset: cannot leave out the only pair");
    std::vector<double> xs, ys;
    xs.reserve(xs_.size() - 1);
    ys.reserve(ys_.size() - 1);
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (i == j) continue;
        xs.push_back(xs_[i]);
        ys.push_back(ys_[i]);
    }
    return Dataset(std::move(xs), std::move(ys));
}

Dataset Dataset::shifted(double c) const {
    std::vector<double> ys(ys_);
    for (double& v : ys) v += c;
    return Dataset(xs_, std::move(ys));
}

Dataset Dataset::with_ys(std::vector<double> ys) const {
    if (ys.size() != xs_.size()) throw ConfigError("dataset: replacement ys length differs");
    return Dataset(xs_, std::move(ys));
}

} // namespace kreg
