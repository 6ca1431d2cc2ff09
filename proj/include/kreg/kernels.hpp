#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kreg/quadrature.hpp"

namespace kreg {

// Support interval of a density; endpoints may be infinite.
struct Interval {
    double lo;
    double hi;

    bool lo_finite() const { return std::isfinite(lo); }
    bool hi_finite() const { return std::isfinite(hi); }
    bool is_finite() const { return lo_finite() && hi_finite(); }
    bool contains(double u) const { return u >= lo && u <= hi; }
};

namespace detail {
// Cumulative prefix table over a finite support, used to accelerate the
// quadrature cdf route for kernels without a closed-form cdf.
struct CdfTable {
    double lo = 0.0;
    double panel_width = 0.0;
    std::vector<double> prefix; // prefix[i] = integral over [lo, lo + i * panel_width]
};
} // namespace detail

//! A smoothing kernel: a probability density on the reals with an optional
//! closed-form cdf and a declared support interval. Immutable after
//! construction; all cached constants are computed in the constructor, so
//! instances can be shared across threads freely.
class Kernel {
public:
    using Fn = std::function<double(double)>;

    // Validates at construction: the density must integrate to 1 within 1e-8
    // over the declared support, and a provided cdf must be nondecreasing
    // with the correct limits at the support endpoints (within 1e-10).
    Kernel(std::string name, Fn pdf, Fn cdf, Interval support);

    double pdf(double u) const { return pdf_(u); }
    bool has_cdf() const { return static_cast<bool>(cdf_); }
    double cdf(double u) const { return cdf_(u); }
    const Interval& support() const { return support_; }
    const std::string& name() const { return name_; }

    // Cumulative integral of the pdf from the support lower end up to x,
    // by adaptive quadrature (never consults the closed-form cdf). Result
    // clamped to [0, 1]; absolute error at most tol.
    double cdf_by_quadrature(double x, double tol) const;

private:
    std::string name_;
    Fn pdf_;
    Fn cdf_;
    Interval support_;
    std::shared_ptr<const detail::CdfTable> table_;
};

//! A mother kernel rescaled by a bandwidth h > 0:
//!   pdf(u) = mother.pdf(u / h) / h,   support endpoints multiplied by h.
class ScaledKernel {
public:
    ScaledKernel(Kernel mother, double h);

    double pdf(double u) const { return mother_.pdf(u / h_) / h_; }
    bool has_cdf() const { return mother_.has_cdf(); }
    double cdf(double u) const { return mother_.cdf(u / h_); }
    Interval support() const;

    const Kernel& mother() const { return mother_; }
    double bandwidth() const { return h_; }

private:
    Kernel mother_;
    double h_;
};

ScaledKernel scale(const Kernel& k, double h);

// Built-in kernel families.
Kernel make_gaussian();
Kernel make_rectangular();                                  // uniform on (-1/2, 1/2)
Kernel make_bump();                                         // b * exp(-1/(1-u^2)) on (-1, 1)
Kernel make_exp_power(double p);                            // c_p * exp(-|u|^p), p >= 1
Kernel make_gaussian_mixture(double mu1, double mu2, double w);

// Kernel selection by name: "gaussian", "rectangular", "bump",
// "exp_power:p=<val>", "gauss_mix:mu1=<v>,mu2=<v>,w=<v>".
Kernel kernel_by_name(const std::string& spec);

// Distribution function value at x: closed form when the kernel has one,
// otherwise adaptive quadrature of the pdf from the support lower end.
// Clamped to [0, 1].
double kernel_cdf(const Kernel& k, double x, double tol = kDefaultQuadTol);
double kernel_cdf(const ScaledKernel& k, double x, double tol = kDefaultQuadTol);

} // namespace kreg
