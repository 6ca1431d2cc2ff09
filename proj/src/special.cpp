#include "kreg/special.hpp"

#include <cmath>

#include "kreg/errors.hpp"

namespace kreg {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490393;
} // namespace

double normal_pdf(double u) { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

double normal_cdf(double u) { return 0.5 * std::erfc(-u * kInvSqrt2); }

namespace {

// Lower incomplete gamma by its power series, valid and fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericError("numeric", "incomplete gamma series did not converge");
}

// Regularized upper incomplete gamma Q(a, x) by modified Lentz continued
// fraction, for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericError("numeric", "incomplete gamma continued fraction did not converge");
}

} // namespace

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0)) throw ConfigError("regularized_lower_gamma requires a > 0");
    if (std::isnan(x)) throw ConfigError("regularized_lower_gamma requires x >= 0");
    if (x <= 0.0) {
        if (x < 0.0) throw ConfigError("regularized_lower_gamma requires x >= 0");
        return 0.0;
    }
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

} // namespace kreg
