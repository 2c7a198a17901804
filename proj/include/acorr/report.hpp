#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acorr/experiments.hpp"

namespace acorr {

/// One (market, time frame) cell of the result document. The rolling r1 series
/// lives in a referenced CSV table; the document itself stays small.
struct TimeFrameReport {
    TimeFrame time_frame = TimeFrame::D1;
    size_t n_returns = 0;
    int64_t first_timestamp = 0;
    int64_t last_timestamp = 0;
    AcfExperiment acf;
    LbExperiment lb;
    RollingExperiment rolling;
    EfficiencyVerdict verdict;
    std::string acf_csv;      // paths relative to the document
    std::string lb_csv;
    std::string rolling_csv;
};

struct MarketReport {
    std::string market_id;
    std::vector<TimeFrameReport> frames;
};

struct ExperimentError {
    std::string market_id;
    std::string time_frame;
    std::string message;
};

struct ResultDocument {
    std::vector<std::string> markets;
    std::vector<TimeFrame> time_frames;
    int max_lag = 30;
    double alpha = 0.05;
    int rolling_window_days = 365;
    int rolling_step = 1;
    double rolling_sign_threshold = 0.90;
    ReturnKind return_kind = ReturnKind::Log;
    std::vector<MarketReport> market_reports;
    std::vector<ExperimentError> errors;
};

/// Renders the document as JSON with insertion-ordered keys, two-space
/// indentation, ISO-8601 timestamps, and doubles at nine significant digits.
/// Markets and frames are emitted sorted by (market id, frame duration) so the
/// output is a deterministic merge regardless of evaluation order.
std::string render_result_document(const ResultDocument& doc);

std::string render_acf_table(const AcfExperiment& exp);
std::string render_lb_table(const LbExperiment& exp);
std::string render_rolling_table(const RollingExperiment& exp);

}  // namespace acorr
