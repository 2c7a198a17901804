#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "acorr/io.hpp"
#include "acorr/marketdata.hpp"

namespace acorr {

enum class ReturnKind { Log, Simple };

const char* to_string(ReturnKind kind);
ReturnKind parse_return_kind(std::string_view text);

/// Bar-to-bar returns. values[i] covers the move into bar i+1 and is stamped
/// with that bar's open_time. gap_mask, when non-empty, marks returns whose
/// two bars are not adjacent buckets; statistics never look at it.
struct ReturnSeries {
    std::string market_id;
    TimeFrame time_frame = TimeFrame::D1;
    ReturnKind kind = ReturnKind::Log;
    std::vector<int64_t> timestamps;
    std::vector<double> values;
    std::vector<uint8_t> gap_mask;

    size_t size() const { return values.size(); }
};

/// Computes returns over consecutive existing bars (gaps included, unscaled).
/// Throws std::invalid_argument on fewer than 2 bars or a non-positive close.
ReturnSeries compute_returns(std::span<const Bar> bars, ReturnKind kind,
                             std::string market_id);

/// CSV form: "# market=<id> tf=<frame> kind=<LOG|SIMPLE>" then
/// "timestamp,return" rows with ISO-8601 stamps.
void write_return_series_csv(std::ostream& out, const ReturnSeries& series);

/// Reads the format written above. Throws std::runtime_error on malformed input.
ReturnSeries read_return_series_csv(LineReader& in);

}  // namespace acorr
