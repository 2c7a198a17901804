#include "acorr/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "acorr/special.hpp"

namespace acorr {

namespace {

double mean_of(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    return sum / static_cast<double>(x.size());
}

double centered_sumsq(std::span<const double> x, double mean) {
    double sum = 0.0;
    for (double v : x) {
        const double d = v - mean;
        sum += d * d;
    }
    return sum;
}

double lag_numerator(std::span<const double> x, double mean, int k) {
    double sum = 0.0;
    const size_t n = x.size();
    for (size_t t = 0; t + static_cast<size_t>(k) < n; ++t) {
        sum += (x[t] - mean) * (x[t + static_cast<size_t>(k)] - mean);
    }
    return sum;
}

// Lag-1 coefficient of one window; NaN when the window has no variance.
double window_r1(std::span<const double> w) {
    const double mean = mean_of(w);
    const double den = centered_sumsq(w, mean);
    if (!(den > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return lag_numerator(w, mean, 1) / den;
}

}  // namespace

std::vector<double> acf_values(std::span<const double> x, int max_lag) {
    const size_t n = x.size();
    if (max_lag < 1) throw std::invalid_argument("acf: max_lag must be >= 1");
    if (n < static_cast<size_t>(max_lag) + 1) {
        throw std::invalid_argument("acf: series must be longer than max_lag");
    }
    const double mean = mean_of(x);
    const double den = centered_sumsq(x, mean);
    if (!(den > 0.0)) throw std::invalid_argument("acf: series has zero variance");
    std::vector<double> r(static_cast<size_t>(max_lag));
    for (int k = 1; k <= max_lag; ++k) {
        r[static_cast<size_t>(k) - 1] = lag_numerator(x, mean, k) / den;
    }
    return r;
}

double confidence_band(size_t n, double alpha) {
    if (n < 2) throw std::invalid_argument("confidence_band: n must be >= 2");
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("confidence_band: alpha must be in (0, 1)");
    }
    return normal_quantile(1.0 - alpha / 2.0) / std::sqrt(static_cast<double>(n));
}

AcfResult acf(const ReturnSeries& series, int max_lag, double alpha) {
    AcfResult result;
    result.n = series.size();
    result.max_lag = max_lag;
    result.coefficients = acf_values(series.values, max_lag);
    result.alpha = alpha;
    result.band_half_width = confidence_band(result.n, alpha);
    return result;
}

LjungBoxResult ljung_box_values(std::span<const double> x, int max_lag, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("ljung_box: alpha must be in (0, 1)");
    }
    LjungBoxResult result;
    result.n = x.size();
    result.max_lag = max_lag;
    result.alpha = alpha;
    const std::vector<double> r = acf_values(x, max_lag);
    const double n = static_cast<double>(result.n);
    const double scale = n * (n + 2.0);
    double partial = 0.0;
    result.q_values.reserve(static_cast<size_t>(max_lag));
    result.p_values.reserve(static_cast<size_t>(max_lag));
    result.reject.reserve(static_cast<size_t>(max_lag));
    for (int k = 1; k <= max_lag; ++k) {
        const double rk = r[static_cast<size_t>(k) - 1];
        partial += rk * rk / (n - static_cast<double>(k));
        const double q = scale * partial;
        // upper tail computed directly, so far-tail p-values do not cancel to 0 prematurely
        const double p = chi2_sf(q, k);
        result.q_values.push_back(q);
        result.p_values.push_back(p);
        result.reject.push_back(p < alpha ? 1 : 0);
    }
    return result;
}

LjungBoxResult ljung_box(const ReturnSeries& series, int max_lag, double alpha) {
    return ljung_box_values(series.values, max_lag, alpha);
}

std::vector<double> rolling_acf1_values(std::span<const double> x, int window_len, int step) {
    if (window_len < 3) throw std::invalid_argument("rolling_acf1: window_len must be >= 3");
    if (step < 1) throw std::invalid_argument("rolling_acf1: step must be >= 1");
    if (x.size() < static_cast<size_t>(window_len)) {
        throw std::invalid_argument("rolling_acf1: window longer than series");
    }
    const size_t w = static_cast<size_t>(window_len);
    const size_t count = (x.size() - w) / static_cast<size_t>(step) + 1;
    std::vector<double> r1(count);

    const auto compute_range = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            r1[i] = window_r1(x.subspan(i * static_cast<size_t>(step), w));
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const size_t workers = hw > 1 ? std::min<size_t>(hw, (count + 1023) / 1024) : 1;
    if (workers <= 1) {
        compute_range(0, count);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const size_t chunk = (count + workers - 1) / workers;
        for (size_t j = 0; j < workers; ++j) {
            const size_t begin = j * chunk;
            const size_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(compute_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return r1;
}

RollingAcfResult rolling_acf1(const ReturnSeries& series, int window_len, int step) {
    RollingAcfResult result;
    result.window_len = window_len;
    result.step = step;
    result.r1_values = rolling_acf1_values(series.values, window_len, step);
    result.window_end_timestamps.reserve(result.r1_values.size());
    for (size_t i = 0; i < result.r1_values.size(); ++i) {
        const size_t last = i * static_cast<size_t>(step) + static_cast<size_t>(window_len) - 1;
        result.window_end_timestamps.push_back(series.timestamps[last]);
    }
    return result;
}

}  // namespace acorr
