#include "acorr/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace acorr {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

double gamma_prefactor(double a, double x) {
    return std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// P(a,x) by power series in x.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * gamma_prefactor(a, x);
}

// Q(a,x) by continued fraction, modified Lentz.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h * gamma_prefactor(a, x);
}

void check_gamma_args(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_p/gamma_q: a must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("gamma_p/gamma_q: x must be non-negative");
}

}  // namespace

double gamma_p(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    const double q = gamma_q_cf(a, x);
    return q < 1.0 ? 1.0 - q : 0.0;
}

double gamma_q(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        const double p = gamma_p_series(a, x);
        return p < 1.0 ? 1.0 - p : 0.0;
    }
    return gamma_q_cf(a, x);
}

double chi2_cdf(double x, int k) {
    if (k < 1) throw std::invalid_argument("chi2_cdf: degrees of freedom must be >= 1");
    if (!(x >= 0.0)) throw std::invalid_argument("chi2_cdf: x must be non-negative");
    return gamma_p(0.5 * k, 0.5 * x);
}

double chi2_sf(double x, int k) {
    if (k < 1) throw std::invalid_argument("chi2_sf: degrees of freedom must be >= 1");
    if (!(x >= 0.0)) throw std::invalid_argument("chi2_sf: x must be non-negative");
    return gamma_q(0.5 * k, 0.5 * x);
}

namespace {

double chi2_pdf(double x, int k) {
    const double a = 0.5 * k;
    if (x <= 0.0) return 0.0;
    return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * std::log(2.0) - std::lgamma(a));
}

}  // namespace

double chi2_quantile(double p, int k) {
    if (k < 1) throw std::invalid_argument("chi2_quantile: degrees of freedom must be >= 1");
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("chi2_quantile: p must be in [0, 1)");
    if (p == 0.0) return 0.0;

    // Bracket the root, then bisect until the interval is small.
    double lo = 0.0;
    double hi = k + 10.0 * std::sqrt(2.0 * k) + 10.0;
    while (chi2_cdf(hi, k) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chi2_cdf(mid, k) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton polish; the bisected midpoint is already close.
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        const double f = chi2_cdf(x, k) - p;
        const double df = chi2_pdf(x, k);
        if (df <= 0.0) break;
        const double step = f / df;
        double next = x - step;
        if (next <= lo || next >= hi) break;  // keep the bracket
        x = next;
        if (std::fabs(step) <= 1e-14 * (1.0 + std::fabs(x))) break;
    }
    return x;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p must be in (0, 1)");

    // Acklam's rational approximation.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Halley step against the exact CDF.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace acorr
