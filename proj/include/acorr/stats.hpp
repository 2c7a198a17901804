#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "acorr/series.hpp"

namespace acorr {

/// Sample autocorrelation for lags 1..max_lag with the white-noise confidence
/// band half-width z_{1-alpha/2}/sqrt(n).
struct AcfResult {
    size_t n = 0;
    int max_lag = 0;
    std::vector<double> coefficients;  // lag 1..max_lag
    double band_half_width = 0.0;
    double alpha = 0.05;

    double at(int lag) const { return coefficients.at(static_cast<size_t>(lag) - 1); }
};

/// Ljung-Box portmanteau statistics. q_values[k-1] accumulates lags 1..k and
/// p_values[k-1] is the chi-squared upper tail with k degrees of freedom.
struct LjungBoxResult {
    size_t n = 0;
    int max_lag = 0;
    std::vector<double> q_values;
    std::vector<double> p_values;
    double alpha = 0.05;
    std::vector<uint8_t> reject;  // p < alpha, per lag
};

/// Lag-1 autocorrelation over a sliding window. Zero-variance windows carry
/// NaN as a gap marker; every other value is the plain estimator applied to
/// exactly that window.
struct RollingAcfResult {
    int window_len = 0;
    int step = 1;
    std::vector<int64_t> window_end_timestamps;
    std::vector<double> r1_values;
};

/// Core estimator on raw values: r_k = sum (x_t - m)(x_{t+k} - m) / sum (x_t - m)^2
/// with a single full-sample mean and a divisor-n denominator.
/// Throws std::invalid_argument for max_lag < 1, n < max_lag + 1, or zero variance.
std::vector<double> acf_values(std::span<const double> x, int max_lag);

AcfResult acf(const ReturnSeries& series, int max_lag, double alpha = 0.05);

/// White-noise band half-width z_{1-alpha/2}/sqrt(n). Requires n >= 2, 0 < alpha < 1.
double confidence_band(size_t n, double alpha);

LjungBoxResult ljung_box_values(std::span<const double> x, int max_lag, double alpha = 0.05);
LjungBoxResult ljung_box(const ReturnSeries& series, int max_lag, double alpha = 0.05);

/// Window positions advance by step; each r1 is stamped with the window's last
/// timestamp. Positions are independent, so the scan partitions across worker
/// threads with results identical to the sequential order.
RollingAcfResult rolling_acf1(const ReturnSeries& series, int window_len, int step = 1);

/// rolling_acf1 on raw values (timestamps omitted); used by the bindings.
std::vector<double> rolling_acf1_values(std::span<const double> x, int window_len, int step = 1);

}  // namespace acorr
