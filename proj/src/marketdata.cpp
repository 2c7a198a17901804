#include "acorr/marketdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

#include "acorr/numfmt.hpp"

namespace acorr {

namespace {

constexpr double kSecondsCutoff = 1e11;  // numeric timestamps below this are seconds

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t comma = line.find(',', start);
        std::string field = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const size_t b = field.find_first_not_of(" \t");
        const size_t e = field.find_last_not_of(" \t");
        fields.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Index of a header column by (case-insensitive) name, or -1.
int find_column(const std::vector<std::string>& header, const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (lower(header[i]) == name) return static_cast<int>(i);
    }
    return -1;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool looks_like_iso(const std::string& s) {
    return s.size() >= 10 && s[4] == '-' && s[7] == '-';
}

bool parse_timestamp(const std::string& s, TimestampUnit unit, int64_t& out) {
    if (looks_like_iso(s)) {
        try {
            out = parse_iso8601(s);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    double v = 0.0;
    if (!parse_double(s, v)) return false;
    switch (unit) {
        case TimestampUnit::Seconds:
            out = static_cast<int64_t>(v * 1000.0);
            return true;
        case TimestampUnit::Millis:
            out = static_cast<int64_t>(v);
            return true;
        case TimestampUnit::Auto:
            out = v < kSecondsCutoff ? static_cast<int64_t>(v * 1000.0) : static_cast<int64_t>(v);
            return true;
    }
    return false;
}

}  // namespace

std::vector<Trade> parse_trades(LineReader& in, const TradeFormat& format, ParseReport& report) {
    std::string line;
    if (!in.next(line)) throw std::runtime_error("trade CSV: empty input, header expected");
    const auto header = split_csv(line);
    const int col_ts = find_column(header, "timestamp");
    const int col_price = find_column(header, "price");
    const int col_size = find_column(header, "amount");
    if (col_ts < 0 || col_price < 0 || col_size < 0) {
        throw std::runtime_error("trade CSV: header must name timestamp, price and amount columns");
    }
    const size_t min_fields =
        static_cast<size_t>(std::max({col_ts, col_price, col_size})) + 1;

    std::vector<Trade> trades;
    size_t row = 0;
    while (in.next(line)) {
        if (line.empty()) continue;
        ++row;
        const auto fields = split_csv(line);
        if (fields.size() < min_fields) {
            report.skipped.push_back({row, "missing_fields"});
            continue;
        }
        Trade t;
        if (!parse_timestamp(fields[col_ts], format.unit, t.timestamp)) {
            report.skipped.push_back({row, "bad_timestamp"});
            continue;
        }
        if (!parse_double(fields[col_price], t.price)) {
            report.skipped.push_back({row, "bad_field"});
            continue;
        }
        if (!parse_double(fields[col_size], t.size)) {
            report.skipped.push_back({row, "bad_field"});
            continue;
        }
        if (!(t.price > 0.0)) {
            report.skipped.push_back({row, "non_positive_price"});
            continue;
        }
        if (!(t.size > 0.0)) {
            report.skipped.push_back({row, "non_positive_size"});
            continue;
        }
        trades.push_back(t);
    }
    if (row > 0 && trades.empty()) {
        throw std::runtime_error("trade CSV: no parsable rows");
    }
    report.parsed = trades.size();
    std::stable_sort(trades.begin(), trades.end(),
                     [](const Trade& a, const Trade& b) { return a.timestamp < b.timestamp; });
    return trades;
}

std::vector<Bar> parse_candles(LineReader& in, TimeFrame tf, ParseReport& report) {
    std::string line;
    if (!in.next(line)) throw std::runtime_error("candle CSV: empty input, header expected");
    const auto header = split_csv(line);
    const int col_time = find_column(header, "open_time");
    const int col_open = find_column(header, "open");
    const int col_high = find_column(header, "high");
    const int col_low = find_column(header, "low");
    const int col_close = find_column(header, "close");
    const int col_volume = find_column(header, "volume");
    if (col_time < 0 || col_open < 0 || col_high < 0 || col_low < 0 || col_close < 0 ||
        col_volume < 0) {
        throw std::runtime_error(
            "candle CSV: header must name open_time, open, high, low, close, volume columns");
    }
    const int col_count = find_column(header, "trade_count");
    const size_t min_fields =
        static_cast<size_t>(std::max({col_time, col_open, col_high, col_low, col_close,
                                      col_volume, col_count})) + 1;

    std::vector<Bar> bars;
    std::unordered_set<int64_t> seen;
    size_t row = 0;
    while (in.next(line)) {
        if (line.empty()) continue;
        ++row;
        const auto fields = split_csv(line);
        if (fields.size() < min_fields) {
            report.skipped.push_back({row, "missing_fields"});
            continue;
        }
        Bar b;
        b.time_frame = tf;
        double count = 0.0;
        if (!parse_timestamp(fields[col_time], TimestampUnit::Auto, b.open_time) ||
            !parse_double(fields[col_open], b.open) || !parse_double(fields[col_high], b.high) ||
            !parse_double(fields[col_low], b.low) || !parse_double(fields[col_close], b.close) ||
            !parse_double(fields[col_volume], b.volume) ||
            (col_count >= 0 && !parse_double(fields[col_count], count))) {
            report.skipped.push_back({row, "bad_field"});
            continue;
        }
        b.trade_count = static_cast<int64_t>(count);
        if (!(b.open > 0.0 && b.high > 0.0 && b.low > 0.0 && b.close > 0.0)) {
            report.skipped.push_back({row, "non_positive_price"});
            continue;
        }
        if (b.volume < 0.0 || b.trade_count < 0) {
            report.skipped.push_back({row, "negative_volume"});
            continue;
        }
        if (b.high < b.low || b.low > std::min(b.open, b.close) ||
            b.high < std::max(b.open, b.close)) {
            report.skipped.push_back({row, "inconsistent_ohlc"});
            continue;
        }
        if (bucket_start(b.open_time, tf) != b.open_time) {
            report.skipped.push_back({row, "misaligned_open_time"});
            continue;
        }
        if (!seen.insert(b.open_time).second) {
            report.skipped.push_back({row, "duplicate_open_time"});
            continue;
        }
        bars.push_back(b);
    }
    report.parsed = bars.size();
    std::sort(bars.begin(), bars.end(),
              [](const Bar& a, const Bar& b) { return a.open_time < b.open_time; });
    return bars;
}

std::vector<Bar> aggregate_trades(std::span<const Trade> trades, TimeFrame tf) {
    std::vector<Bar> bars;
    int64_t prev_ts = INT64_MIN;
    for (const Trade& t : trades) {
        if (t.timestamp < prev_ts) {
            throw std::invalid_argument("aggregate_trades: trades must be sorted by timestamp");
        }
        prev_ts = t.timestamp;
        const int64_t bucket = bucket_start(t.timestamp, tf);
        if (bars.empty() || bars.back().open_time != bucket) {
            Bar b;
            b.open_time = bucket;
            b.time_frame = tf;
            b.open = b.high = b.low = b.close = t.price;
            b.volume = t.size;
            b.trade_count = 1;
            bars.push_back(b);
        } else {
            Bar& b = bars.back();
            b.high = std::max(b.high, t.price);
            b.low = std::min(b.low, t.price);
            b.close = t.price;
            b.volume += t.size;
            b.trade_count += 1;
        }
    }
    return bars;
}

std::vector<Bar> resample_bars(std::span<const Bar> bars, TimeFrame target) {
    std::vector<Bar> out;
    if (bars.empty()) return out;
    const TimeFrame source = bars.front().time_frame;
    if (duration_ms(target) % duration_ms(source) != 0) {
        throw std::invalid_argument("resample_bars: target frame is not a multiple of the source frame");
    }
    int64_t prev_ts = INT64_MIN;
    for (const Bar& src : bars) {
        if (src.time_frame != source) {
            throw std::invalid_argument("resample_bars: mixed source time frames");
        }
        if (src.open_time <= prev_ts) {
            throw std::invalid_argument("resample_bars: bars must be strictly increasing in open_time");
        }
        prev_ts = src.open_time;
        const int64_t bucket = bucket_start(src.open_time, target);
        if (out.empty() || out.back().open_time != bucket) {
            Bar b = src;
            b.open_time = bucket;
            b.time_frame = target;
            out.push_back(b);
        } else {
            Bar& b = out.back();
            b.high = std::max(b.high, src.high);
            b.low = std::min(b.low, src.low);
            b.close = src.close;
            b.volume += src.volume;
            b.trade_count += src.trade_count;
        }
    }
    return out;
}

void write_candles_csv(std::ostream& out, std::span<const Bar> bars) {
    out << "open_time,open,high,low,close,volume,trade_count\n";
    for (const Bar& b : bars) {
        out << format_iso8601(b.open_time) << ',' << format_sig9(b.open) << ','
            << format_sig9(b.high) << ',' << format_sig9(b.low) << ',' << format_sig9(b.close)
            << ',' << format_sig9(b.volume) << ',' << b.trade_count << '\n';
    }
}

void write_skip_report(std::ostream& out, const ParseReport& report) {
    for (const RowIssue& issue : report.skipped) {
        out << "row=" << issue.row << " reason=" << issue.reason << '\n';
    }
}

}  // namespace acorr
