#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acorr/stats.hpp"

namespace acorr {

struct ExperimentConfig {
    std::string market_id;
    std::vector<TimeFrame> time_frames = {TimeFrame::M5, TimeFrame::H1, TimeFrame::D1,
                                          TimeFrame::W1};
    int max_lag = 30;
    double alpha = 0.05;
    int rolling_window_days = 365;
    int rolling_step = 1;
    // A rolling scan counts against the market when more than this fraction of
    // windows agree on one sign and the median |r1| clears the band.
    double rolling_sign_threshold = 0.90;
    ReturnKind return_kind = ReturnKind::Log;

    void validate() const;
};

/// Rolling window length in values for a frame: floor(days * 86400 / frame seconds).
/// 365 days gives 105120 (5m), 8760 (1h), 365 (1d), 52 (1w).
int rolling_window_len(TimeFrame tf, int days);

struct AcfExperiment {
    AcfResult result;
    std::vector<int> breach_lags;             // |r_k| > band at the plain alpha band
    double bonferroni_band = 0.0;             // band at alpha / max_lag
    std::vector<int> bonferroni_breach_lags;  // breaches that survive adjustment
    bool violated = false;                    // any adjusted breach
};

struct LbExperiment {
    LjungBoxResult result;
    double min_p = 1.0;
    int min_p_lag = 0;
    bool violated = false;  // any p below alpha
};

struct RollingExperiment {
    RollingAcfResult result;
    size_t window_count = 0;
    size_t gap_windows = 0;  // zero-variance windows, excluded from the fractions
    double positive_fraction = 0.0;
    double negative_fraction = 0.0;
    double shared_sign_fraction = 0.0;  // max of the two
    double median_abs_r1 = 0.0;
    double band_half_width = 0.0;  // band at the window length
    bool violated = false;
};

/// Per-time-frame aggregation of the three tests. The null hypothesis is
/// efficiency, so the verdict only ever rejects or fails to reject it.
struct EfficiencyVerdict {
    bool acf_condition_violated = false;
    bool lb_condition_violated = false;
    bool rolling_condition_violated = false;
    std::vector<int> acf_breach_lags;
    double lb_min_p = 1.0;
    double rolling_sign_fraction = 0.0;
    bool emh_rejected = false;  // all three conditions violated
    std::string label;          // "EMH rejected" / "EMH not rejected"
};

AcfExperiment run_acf_experiment(const ReturnSeries& series, const ExperimentConfig& cfg);
LbExperiment run_lb_experiment(const ReturnSeries& series, const ExperimentConfig& cfg);
RollingExperiment run_rolling_experiment(const ReturnSeries& series, const ExperimentConfig& cfg);

/// Throws std::invalid_argument when any experiment is missing.
EfficiencyVerdict evaluate_verdict(const std::optional<AcfExperiment>& acf_exp,
                                   const std::optional<LbExperiment>& lb_exp,
                                   const std::optional<RollingExperiment>& rolling_exp,
                                   const ExperimentConfig& cfg);

}  // namespace acorr
