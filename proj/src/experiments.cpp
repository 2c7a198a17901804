#include "acorr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace acorr {

void ExperimentConfig::validate() const {
    if (market_id.empty()) throw std::invalid_argument("experiment config: empty market id");
    if (time_frames.empty()) throw std::invalid_argument("experiment config: no time frames");
    if (max_lag < 1) throw std::invalid_argument("experiment config: max_lag must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("experiment config: alpha must be in (0, 1)");
    if (rolling_window_days < 1)
        throw std::invalid_argument("experiment config: rolling window days must be >= 1");
    if (rolling_step < 1) throw std::invalid_argument("experiment config: rolling step must be >= 1");
    if (!(rolling_sign_threshold > 0.0 && rolling_sign_threshold < 1.0))
        throw std::invalid_argument("experiment config: sign threshold must be in (0, 1)");
}

int rolling_window_len(TimeFrame tf, int days) {
    if (days < 1) throw std::invalid_argument("rolling window: days must be >= 1");
    const long long seconds = static_cast<long long>(days) * 86'400LL;
    return static_cast<int>(seconds / (duration_ms(tf) / 1000));
}

AcfExperiment run_acf_experiment(const ReturnSeries& series, const ExperimentConfig& cfg) {
    cfg.validate();
    AcfExperiment exp;
    exp.result = acf(series, cfg.max_lag, cfg.alpha);
    for (int k = 1; k <= cfg.max_lag; ++k) {
        if (std::fabs(exp.result.at(k)) > exp.result.band_half_width) exp.breach_lags.push_back(k);
    }
    // The decision band is Bonferroni-adjusted for the number of lags tested;
    // unadjusted breaches are still reported.
    const double adjusted_alpha = cfg.alpha / static_cast<double>(cfg.max_lag);
    exp.bonferroni_band = confidence_band(exp.result.n, adjusted_alpha);
    for (int k = 1; k <= cfg.max_lag; ++k) {
        if (std::fabs(exp.result.at(k)) > exp.bonferroni_band)
            exp.bonferroni_breach_lags.push_back(k);
    }
    exp.violated = !exp.bonferroni_breach_lags.empty();
    return exp;
}

LbExperiment run_lb_experiment(const ReturnSeries& series, const ExperimentConfig& cfg) {
    cfg.validate();
    LbExperiment exp;
    exp.result = ljung_box(series, cfg.max_lag, cfg.alpha);
    exp.min_p = 1.0;
    exp.min_p_lag = 0;
    for (int k = 1; k <= cfg.max_lag; ++k) {
        const double p = exp.result.p_values[static_cast<size_t>(k - 1)];
        if (exp.min_p_lag == 0 || p < exp.min_p) {
            exp.min_p = p;
            exp.min_p_lag = k;
        }
        if (p < cfg.alpha) exp.violated = true;
    }
    return exp;
}

RollingExperiment run_rolling_experiment(const ReturnSeries& series, const ExperimentConfig& cfg) {
    cfg.validate();
    RollingExperiment exp;
    const int window_len = rolling_window_len(series.time_frame, cfg.rolling_window_days);
    exp.result = rolling_acf1(series, window_len, cfg.rolling_step);
    exp.window_count = exp.result.r1_values.size();

    std::vector<double> abs_values;
    abs_values.reserve(exp.window_count);
    size_t positive = 0;
    size_t negative = 0;
    for (double r1 : exp.result.r1_values) {
        if (std::isnan(r1)) {
            ++exp.gap_windows;
            continue;
        }
        if (r1 > 0.0) ++positive;
        if (r1 < 0.0) ++negative;
        abs_values.push_back(std::fabs(r1));
    }
    const size_t usable = exp.window_count - exp.gap_windows;
    if (usable > 0) {
        exp.positive_fraction = static_cast<double>(positive) / static_cast<double>(usable);
        exp.negative_fraction = static_cast<double>(negative) / static_cast<double>(usable);
        exp.shared_sign_fraction = std::max(exp.positive_fraction, exp.negative_fraction);
        auto mid = abs_values.begin() + static_cast<ptrdiff_t>(abs_values.size() / 2);
        std::nth_element(abs_values.begin(), mid, abs_values.end());
        if (abs_values.size() % 2 == 1) {
            exp.median_abs_r1 = *mid;
        } else {
            const double upper = *mid;
            const double lower = *std::max_element(abs_values.begin(), mid);
            exp.median_abs_r1 = 0.5 * (lower + upper);
        }
    }
    exp.band_half_width = confidence_band(window_len, cfg.alpha);
    exp.violated = exp.shared_sign_fraction > cfg.rolling_sign_threshold &&
                   exp.median_abs_r1 > exp.band_half_width;
    return exp;
}

EfficiencyVerdict evaluate_verdict(const std::optional<AcfExperiment>& acf_exp,
                                   const std::optional<LbExperiment>& lb_exp,
                                   const std::optional<RollingExperiment>& rolling_exp,
                                   const ExperimentConfig& cfg) {
    cfg.validate();
    if (!acf_exp) throw std::invalid_argument("verdict: missing acf experiment");
    if (!lb_exp) throw std::invalid_argument("verdict: missing ljung-box experiment");
    if (!rolling_exp) throw std::invalid_argument("verdict: missing rolling experiment");

    EfficiencyVerdict v;
    v.acf_condition_violated = acf_exp->violated;
    v.lb_condition_violated = lb_exp->violated;
    v.rolling_condition_violated = rolling_exp->violated;
    v.acf_breach_lags = acf_exp->bonferroni_breach_lags;
    v.lb_min_p = lb_exp->min_p;
    v.rolling_sign_fraction = rolling_exp->shared_sign_fraction;
    v.emh_rejected =
        v.acf_condition_violated && v.lb_condition_violated && v.rolling_condition_violated;
    v.label = v.emh_rejected ? "EMH rejected" : "EMH not rejected";
    return v;
}

}  // namespace acorr
