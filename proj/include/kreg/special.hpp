#pragma once

namespace kreg {

// Standard normal density and distribution function.
double normal_pdf(double u);
double normal_cdf(double u);

// Regularized lower incomplete gamma function P(a, x) for a > 0, x >= 0.
// Series expansion for x < a + 1, Lentz continued fraction otherwise.
double regularized_lower_gamma(double a, double x);

} // namespace kreg
