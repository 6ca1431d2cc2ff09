#include "kreg/isotonic.hpp"

#include <cmath>

namespace kreg {

IsotonicFit pava(std::span<const double> ys, std::span<const double> weights) {
    if (ys.empty()) throw ConfigError("pava: empty input");
    if (!weights.empty() && weights.size() != ys.size())
        throw ConfigError("pava: weights length differs from ys");
    for (double w : weights)
        if (!(w > 0.0)) throw ConfigError("pava: weights must be positive");

    // Stack of merged blocks; a new element is merged backwards while it
    // strictly undercuts the mean of the block before it.
    struct Block {
        std::size_t begin;
        double weight;
        double weighted_sum;
        double mean() const { return weighted_sum / weight; }
    };
    std::vector<Block> stack;
    stack.reserve(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double w = weights.empty() ? 1.0 : weights[i];
        Block b{i, w, w * ys[i]};
        while (!stack.empty() && stack.back().mean() > b.mean()) {
            b.begin = stack.back().begin;
            b.weight += stack.back().weight;
            b.weighted_sum += stack.back().weighted_sum;
            stack.pop_back();
        }
        stack.push_back(b);
    }

    IsotonicFit fit;
    fit.ys_iso.resize(ys.size());
    fit.blocks.reserve(stack.size());
    for (std::size_t bi = 0; bi < stack.size(); ++bi) {
        std::size_t end = bi + 1 < stack.size() ? stack[bi + 1].begin : ys.size();
        double v = stack[bi].mean();
        for (std::size_t i = stack[bi].begin; i < end; ++i) fit.ys_iso[i] = v;
        // Coalesce adjacent blocks that landed on exactly the same level.
        if (!fit.blocks.empty() && fit.blocks.back().value == v) {
            fit.blocks.back().end = end;
        } else {
            fit.blocks.push_back({stack[bi].begin, end, v});
        }
    }
    return fit;
}

CurveSample is_pipeline(const Dataset& d, const EstimatorSpec& spec,
                        std::span<const double> grid, double tol) {
    IsotonicFit fit = pava(d.ys());
    Dataset iso = d.with_ys(std::move(fit.ys_iso));
    return eval_grid(iso, spec, grid, tol);
}

CurveSample si_pipeline(const Dataset& d, const EstimatorSpec& spec,
                        std::span<const double> grid, double tol) {
    CurveSample curve = eval_grid(d, spec, grid, tol);
    std::vector<double> defined_values;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        if (curve.defined[i]) {
            defined_values.push_back(curve.values[i]);
            where.push_back(i);
        }
    }
    if (defined_values.empty()) return curve;
    IsotonicFit fit = pava(defined_values);
    for (std::size_t k = 0; k < where.size(); ++k) curve.values[where[k]] = fit.ys_iso[k];
    return curve;
}

} // namespace kreg
