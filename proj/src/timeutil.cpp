#include "acorr/timeutil.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace acorr {

namespace {

// 1969-12-29 was a Monday; anchoring here puts every W1 boundary on Monday 00:00 UTC.
constexpr int64_t kMondayAnchorMs = -3LL * 86'400'000;

// Howard Hinnant's civil-date algorithms (days since 1970-01-01).
int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<int64_t>(era) * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yr = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

}  // namespace

const char* to_string(TimeFrame tf) {
    switch (tf) {
        case TimeFrame::M5: return "5m";
        case TimeFrame::H1: return "1h";
        case TimeFrame::D1: return "1d";
        case TimeFrame::W1: return "1w";
    }
    return "?";
}

TimeFrame parse_time_frame(std::string_view text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "5m" || t == "m5" || t == "5min") return TimeFrame::M5;
    if (t == "1h" || t == "h1") return TimeFrame::H1;
    if (t == "1d" || t == "d1") return TimeFrame::D1;
    if (t == "1w" || t == "w1") return TimeFrame::W1;
    throw std::invalid_argument("unknown time frame: " + std::string(text));
}

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int64_t bucket_start(int64_t ts_ms, TimeFrame tf) {
    const int64_t d = duration_ms(tf);
    const int64_t anchor = tf == TimeFrame::W1 ? kMondayAnchorMs : 0;
    return anchor + floor_div(ts_ms - anchor, d) * d;
}

std::string format_iso8601(int64_t ts_ms) {
    const int64_t days = floor_div(ts_ms, 86'400'000);
    int64_t rem = ts_ms - days * 86'400'000;
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    const int ms = static_cast<int>(rem % 1000);
    rem /= 1000;
    const int ss = static_cast<int>(rem % 60);
    rem /= 60;
    const int mm = static_cast<int>(rem % 60);
    const int hh = static_cast<int>(rem / 60);
    char buf[40];
    if (ms != 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", y, m, d, hh, mm, ss, ms);
    } else {
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", y, m, d, hh, mm, ss);
    }
    return buf;
}

int64_t parse_iso8601(std::string_view text) {
    const auto fail = [&] { throw std::invalid_argument("malformed ISO-8601 timestamp: " + std::string(text)); };
    const auto digits = [&](size_t pos, size_t count) -> int64_t {
        if (pos + count > text.size()) fail();
        int64_t v = 0;
        for (size_t i = 0; i < count; ++i) {
            const char c = text[pos + i];
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };

    if (text.size() < 10 || text[4] != '-' || text[7] != '-') fail();
    const int y = static_cast<int>(digits(0, 4));
    const unsigned mo = static_cast<unsigned>(digits(5, 2));
    const unsigned da = static_cast<unsigned>(digits(8, 2));
    if (mo < 1 || mo > 12 || da < 1 || da > 31) fail();
    {
        // Round-trip through the civil conversion to reject dates like Feb 30.
        int ry;
        unsigned rm, rd;
        civil_from_days(days_from_civil(y, mo, da), ry, rm, rd);
        if (ry != y || rm != mo || rd != da) fail();
    }

    int64_t hh = 0, mi = 0, ss = 0, ms = 0;
    size_t pos = 10;
    if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
        ++pos;
        hh = digits(pos, 2);
        if (pos + 2 >= text.size() || text[pos + 2] != ':') fail();
        mi = digits(pos + 3, 2);
        if (pos + 5 >= text.size() || text[pos + 5] != ':') fail();
        ss = digits(pos + 6, 2);
        pos += 8;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            size_t ndig = 0;
            while (pos + ndig < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[pos + ndig]))) {
                ++ndig;
            }
            if (ndig == 0) fail();
            // keep millisecond precision, truncate anything finer
            for (size_t i = 0; i < 3; ++i) {
                ms = ms * 10 + (i < ndig ? text[pos + i] - '0' : 0);
            }
            pos += ndig;
        }
        if (hh > 23 || mi > 59 || ss > 60) fail();
    }
    if (pos < text.size() && text[pos] == 'Z') ++pos;
    if (pos != text.size()) fail();

    return days_from_civil(y, mo, da) * 86'400'000 + hh * 3'600'000 + mi * 60'000 + ss * 1000 + ms;
}

}  // namespace acorr
