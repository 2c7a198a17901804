#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "acorr/io.hpp"
#include "acorr/timeutil.hpp"

namespace acorr {

/// One executed trade. Timestamps are milliseconds since the Unix epoch, UTC.
struct Trade {
    int64_t timestamp = 0;
    double price = 0.0;
    double size = 0.0;
};

/// OHLCV time bar. open_time is the bucket start, aligned to the frame grid.
struct Bar {
    int64_t open_time = 0;
    TimeFrame time_frame = TimeFrame::M5;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume = 0.0;
    int64_t trade_count = 0;
};

enum class TimestampUnit { Auto, Seconds, Millis };

/// Input descriptor for trade CSVs. Auto detects the unit per value: numeric
/// timestamps below 1e11 are treated as seconds, everything else as
/// milliseconds. ISO-8601 strings are always accepted.
struct TradeFormat {
    TimestampUnit unit = TimestampUnit::Auto;
};

struct RowIssue {
    size_t row = 0;  // 1-based data row number (header not counted)
    std::string reason;
};

struct ParseReport {
    size_t parsed = 0;
    std::vector<RowIssue> skipped;
};

/// Parses a trade CSV. The header must name timestamp, price and amount
/// columns (case-insensitive, extra columns ignored). Malformed rows are
/// skipped and recorded in the report. Output is stably sorted by timestamp.
///
/// Throws std::runtime_error when the header is missing a required column or
/// when data rows exist but none parse.
std::vector<Trade> parse_trades(LineReader& in, const TradeFormat& format, ParseReport& report);

/// Parses a candle CSV with columns open_time, open, high, low, close, volume
/// (a trade_count column is used when present). Rows violating the OHLC
/// invariants or with open_time off the declared frame's grid are rejected and
/// reported. Bars are sorted; duplicate open_times keep the first occurrence.
std::vector<Bar> parse_candles(LineReader& in, TimeFrame tf, ParseReport& report);

/// Aggregates timestamp-sorted trades into bars. Empty buckets emit no bar.
/// Throws std::invalid_argument on unsorted input.
std::vector<Bar> aggregate_trades(std::span<const Trade> trades, TimeFrame tf);

/// Re-buckets bars into a coarser frame. The target duration must be an
/// integer multiple of the source duration; W1 output follows the
/// Monday-anchored week grid.
std::vector<Bar> resample_bars(std::span<const Bar> bars, TimeFrame target);

/// Writes the candle CSV format (ISO-8601 open_time, 9-significant-digit numbers).
void write_candles_csv(std::ostream& out, std::span<const Bar> bars);

/// Renders one skip-report line per rejected row: "row=<n> reason=<code>".
void write_skip_report(std::ostream& out, const ParseReport& report);

}  // namespace acorr
