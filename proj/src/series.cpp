#include "acorr/series.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "acorr/numfmt.hpp"

namespace acorr {

const char* to_string(ReturnKind kind) {
    return kind == ReturnKind::Log ? "log" : "simple";
}

ReturnKind parse_return_kind(std::string_view text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "log") return ReturnKind::Log;
    if (t == "simple") return ReturnKind::Simple;
    throw std::invalid_argument("unknown return kind: " + std::string(text));
}

ReturnSeries compute_returns(std::span<const Bar> bars, ReturnKind kind, std::string market_id) {
    if (bars.size() < 2) {
        throw std::invalid_argument("compute_returns: at least 2 bars required");
    }
    ReturnSeries series;
    series.market_id = std::move(market_id);
    series.time_frame = bars.front().time_frame;
    series.kind = kind;
    const size_t n = bars.size() - 1;
    series.timestamps.reserve(n);
    series.values.reserve(n);
    series.gap_mask.reserve(n);
    const int64_t frame = duration_ms(series.time_frame);
    for (size_t i = 0; i + 1 < bars.size(); ++i) {
        const double prev = bars[i].close;
        const double cur = bars[i + 1].close;
        if (!(prev > 0.0) || !(cur > 0.0)) {
            throw std::invalid_argument("compute_returns: non-positive close");
        }
        const double r = kind == ReturnKind::Log ? std::log(cur / prev) : cur / prev - 1.0;
        series.timestamps.push_back(bars[i + 1].open_time);
        series.values.push_back(r);
        series.gap_mask.push_back(bars[i + 1].open_time - bars[i].open_time != frame ? 1 : 0);
    }
    return series;
}

void write_return_series_csv(std::ostream& out, const ReturnSeries& series) {
    out << "# market=" << series.market_id << " tf=" << to_string(series.time_frame)
        << " kind=" << to_string(series.kind) << '\n';
    out << "timestamp,return\n";
    for (size_t i = 0; i < series.size(); ++i) {
        out << format_iso8601(series.timestamps[i]) << ',' << format_sig9(series.values[i]) << '\n';
    }
}

ReturnSeries read_return_series_csv(LineReader& in) {
    ReturnSeries series;
    std::string line;
    if (!in.next(line) || line.rfind("# market=", 0) != 0) {
        throw std::runtime_error("return series CSV: missing '# market=...' comment line");
    }
    {
        const size_t tf_pos = line.find(" tf=");
        const size_t kind_pos = line.find(" kind=");
        if (tf_pos == std::string::npos || kind_pos == std::string::npos || kind_pos < tf_pos) {
            throw std::runtime_error("return series CSV: malformed comment line");
        }
        series.market_id = line.substr(9, tf_pos - 9);
        series.time_frame = parse_time_frame(line.substr(tf_pos + 4, kind_pos - tf_pos - 4));
        series.kind = parse_return_kind(line.substr(kind_pos + 6));
    }
    if (!in.next(line) || line != "timestamp,return") {
        throw std::runtime_error("return series CSV: missing 'timestamp,return' header");
    }
    while (in.next(line)) {
        if (line.empty()) continue;
        const size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("return series CSV: malformed row: " + line);
        }
        series.timestamps.push_back(parse_iso8601(line.substr(0, comma)));
        char* end = nullptr;
        const std::string value = line.substr(comma + 1);
        const double r = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size()) {
            throw std::runtime_error("return series CSV: malformed value: " + value);
        }
        series.values.push_back(r);
    }
    return series;
}

}  // namespace acorr
