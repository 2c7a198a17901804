#pragma once

namespace acorr {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, continued fraction otherwise; absolute
/// accuracy around 1e-14 over the range used here.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed directly
/// in the tail so values far below 1e-16 come out without cancellation.
double gamma_q(double a, double x);

/// Chi-squared CDF with k degrees of freedom: P(k/2, x/2).
double chi2_cdf(double x, int k);

/// Upper-tail probability 1 - chi2_cdf(x, k), exact in the far tail.
double chi2_sf(double x, int k);

/// Inverse of chi2_cdf in x for p in [0, 1): bracketing plus bisection,
/// refined with Newton steps. |cdf(result) - p| <= 1e-12.
double chi2_quantile(double p, int k);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile for p in (0, 1). Rational initial estimate
/// polished with one Halley step against erfc; accurate to machine precision.
double normal_quantile(double p);

}  // namespace acorr
