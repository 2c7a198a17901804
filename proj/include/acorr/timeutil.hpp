#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace acorr {

enum class TimeFrame { M5, H1, D1, W1 };

constexpr int64_t duration_ms(TimeFrame tf) {
    switch (tf) {
        case TimeFrame::M5: return 300'000;
        case TimeFrame::H1: return 3'600'000;
        case TimeFrame::D1: return 86'400'000;
        case TimeFrame::W1: return 604'800'000;
    }
    return 0;
}

const char* to_string(TimeFrame tf);

/// Parses "5m", "1h", "1d", "1w" (case-insensitive; "m5"/"h1"/"d1"/"w1" also accepted).
TimeFrame parse_time_frame(std::string_view text);

/// Floored integer division (rounds toward negative infinity). b must be positive.
int64_t floor_div(int64_t a, int64_t b);

/// Start of the bucket containing ts_ms. M5/H1/D1 grids are anchored at the Unix
/// epoch; W1 buckets start on Monday 00:00:00 UTC.
int64_t bucket_start(int64_t ts_ms, TimeFrame tf);

/// ms-since-epoch -> "2019-07-01T00:00:00Z" (millisecond suffix only when nonzero).
std::string format_iso8601(int64_t ts_ms);

/// Accepts "YYYY-MM-DD", "YYYY-MM-DDThh:mm:ss[.fff]" with optional trailing 'Z',
/// or 'T' replaced by a space. Throws std::invalid_argument on malformed input.
int64_t parse_iso8601(std::string_view text);

}  // namespace acorr
