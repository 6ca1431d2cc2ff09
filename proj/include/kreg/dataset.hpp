#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kreg/errors.hpp"

namespace kreg {

//! Paired regression data (x_1, y_1), ..., (x_n, y_n) with x_1 <= ... <= x_n.
//! Unsorted input is sorted jointly by x (stable on ties). The co-monotone
//! flag records whether the y sequence is nondecreasing as well.
class Dataset {
public:
    Dataset(std::vector<double> xs, std::vector<double> ys);

    std::size_t size() const { return xs_.size(); }
    std::span<const double> xs() const { return xs_; }
    std::span<const double> ys() const { return ys_; }
    double x(std::size_t i) const { return xs_[i]; }
    double y(std::size_t i) const { return ys_[i]; }
    bool comonotone() const { return comonotone_; }

    double x_span() const { return xs_.back() - xs_.front(); }
    double y_min() const { return y_min_; }
    double y_max() const { return y_max_; }

    // Copy with the j-th pair removed (leave-one-out fits).
    Dataset leave_out(std::size_t j) const;

    // Copy with every y replaced by y + c.
    Dataset shifted(double c) const;

    // Copy with the same xs and new ys (must have matching length).
    Dataset with_ys(std::vector<double> ys) const;

private:
    std::vector<double> xs_, ys_;
    bool comonotone_ = false;
    double y_min_ = 0.0, y_max_ = 0.0;
};

} // namespace kreg
