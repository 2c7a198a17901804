#include "acorr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "acorr/timeutil.hpp"

namespace acorr {

namespace {

constexpr double kWidth = 1200.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 1180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 550.0;

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Maps a value in [vmin, vmax] to pixel y; larger values sit higher on screen.
double scale_y(double v, double vmin, double vmax) {
    return kBottom - (v - vmin) / (vmax - vmin) * (kBottom - kTop);
}

std::string header(const std::string& title) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1200\" height=\"600\" "
           "viewBox=\"0 0 1200 600\">\n";
    out += "<style>\n"
           ".bg { fill: #ffffff; }\n"
           ".axis { stroke: #333333; stroke-width: 1; }\n"
           ".bar { fill: #3b6ea5; }\n"
           ".band { stroke: #c0392b; stroke-width: 1; stroke-dasharray: 6 4; }\n"
           ".threshold { stroke: #c0392b; stroke-width: 1; stroke-dasharray: 6 4; }\n"
           ".series { stroke: #3b6ea5; stroke-width: 1.2; fill: none; }\n"
           ".zero { stroke: #888888; stroke-width: 1; }\n"
           ".tick { font: 12px sans-serif; fill: #333333; }\n"
           ".title { font: 16px sans-serif; fill: #111111; }\n"
           ".label { font: 13px sans-serif; fill: #333333; }\n"
           "</style>\n";
    out += "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"1200\" height=\"600\"/>\n";
    out += "<text class=\"title\" x=\"" + fmt2(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\">" + xml_escape(title) + "</text>\n";
    return out;
}

std::string hline(const char* cls, double y) {
    return std::string("<line class=\"") + cls + "\" x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(y) +
           "\" x2=\"" + fmt2(kRight) + "\" y2=\"" + fmt2(y) + "\"/>\n";
}

std::string y_tick(double v, double vmin, double vmax) {
    const double y = scale_y(v, vmin, vmax);
    return "<text class=\"tick\" x=\"" + fmt2(kLeft - 8) + "\" y=\"" + fmt2(y + 4) +
           "\" text-anchor=\"end\">" + fmt_tick(v) + "</text>\n";
}

std::string x_tick_label(double x, const std::string& text) {
    return "<text class=\"tick\" x=\"" + fmt2(x) + "\" y=\"" + fmt2(kBottom + 18) +
           "\" text-anchor=\"middle\">" + xml_escape(text) + "</text>\n";
}

std::string axis_labels(const std::string& x_label, const std::string& y_label) {
    std::string out;
    out += "<text class=\"label\" x=\"" + fmt2((kLeft + kRight) / 2) + "\" y=\"" +
           fmt2(kHeight - 12) + "\" text-anchor=\"middle\">" + xml_escape(x_label) + "</text>\n";
    out += "<text class=\"label\" x=\"18\" y=\"" + fmt2((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt2((kTop + kBottom) / 2) +
           ")\">" + xml_escape(y_label) + "</text>\n";
    return out;
}

double lag_center_x(int lag, int max_lag) {
    const double slot = (kRight - kLeft) / static_cast<double>(max_lag);
    return kLeft + (static_cast<double>(lag) - 0.5) * slot;
}

std::string lag_ticks(int max_lag, double vmin, double vmax) {
    std::string out;
    out += y_tick(vmin, vmin, vmax);
    out += y_tick(vmin / 2, vmin, vmax);
    out += y_tick(0.0, vmin, vmax);
    out += y_tick(vmax / 2, vmin, vmax);
    out += y_tick(vmax, vmin, vmax);
    out += x_tick_label(lag_center_x(1, max_lag), "1");
    for (int k = 5; k <= max_lag; k += 5) out += x_tick_label(lag_center_x(k, max_lag), std::to_string(k));
    return out;
}

}  // namespace

std::string render_acf_svg(const AcfResult& result, const std::string& title) {
    if (result.coefficients.empty()) throw std::invalid_argument("acf svg: empty result");
    double peak = result.band_half_width;
    for (double r : result.coefficients) peak = std::max(peak, std::fabs(r));
    const double vmax = 1.15 * peak;
    const double vmin = -vmax;

    std::string out = header(title);
    out += lag_ticks(result.max_lag, vmin, vmax);
    out += axis_labels("lag", "r_k");
    out += "<line class=\"axis\" x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kTop) + "\" x2=\"" +
           fmt2(kLeft) + "\" y2=\"" + fmt2(kBottom) + "\"/>\n";
    out += hline("axis", scale_y(0.0, vmin, vmax));
    out += hline("band", scale_y(result.band_half_width, vmin, vmax));
    out += hline("band", scale_y(-result.band_half_width, vmin, vmax));

    const double slot = (kRight - kLeft) / static_cast<double>(result.max_lag);
    const double bar_w = 0.6 * slot;
    const double y0 = scale_y(0.0, vmin, vmax);
    for (int k = 1; k <= result.max_lag; ++k) {
        const double r = result.at(k);
        const double y = scale_y(r, vmin, vmax);
        const double top = std::min(y, y0);
        const double h = std::fabs(y - y0);
        out += "<rect class=\"bar\" x=\"" + fmt2(lag_center_x(k, result.max_lag) - bar_w / 2) +
               "\" y=\"" + fmt2(top) + "\" width=\"" + fmt2(bar_w) + "\" height=\"" + fmt2(h) +
               "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_lb_svg(const LjungBoxResult& result, const std::string& title) {
    if (result.p_values.empty()) throw std::invalid_argument("ljung-box svg: empty result");
    const double vmin = 0.0;
    const double vmax = 1.05;

    std::string out = header(title);
    out += y_tick(0.0, vmin, vmax);
    out += y_tick(0.25, vmin, vmax);
    out += y_tick(0.5, vmin, vmax);
    out += y_tick(0.75, vmin, vmax);
    out += y_tick(1.0, vmin, vmax);
    out += x_tick_label(lag_center_x(1, result.max_lag), "1");
    for (int k = 5; k <= result.max_lag; k += 5)
        out += x_tick_label(lag_center_x(k, result.max_lag), std::to_string(k));
    out += axis_labels("lag", "p-value");
    out += "<line class=\"axis\" x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kTop) + "\" x2=\"" +
           fmt2(kLeft) + "\" y2=\"" + fmt2(kBottom) + "\"/>\n";
    out += hline("axis", scale_y(0.0, vmin, vmax));
    out += hline("threshold", scale_y(result.alpha, vmin, vmax));

    std::string points;
    for (int k = 1; k <= result.max_lag; ++k) {
        if (k > 1) points += ' ';
        points += fmt2(lag_center_x(k, result.max_lag)) + ',' +
                  fmt2(scale_y(result.p_values[static_cast<size_t>(k - 1)], vmin, vmax));
    }
    out += "<polyline class=\"series\" points=\"" + points + "\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string render_rolling_svg(const RollingAcfResult& result, const std::string& title) {
    if (result.r1_values.empty()) throw std::invalid_argument("rolling svg: empty result");
    double peak = 0.01;
    for (double r : result.r1_values) {
        if (!std::isnan(r)) peak = std::max(peak, std::fabs(r));
    }
    const double vmax = 1.15 * peak;
    const double vmin = -vmax;

    const int64_t t0 = result.window_end_timestamps.front();
    const int64_t t1 = result.window_end_timestamps.back();
    auto x_of = [&](int64_t t) {
        if (t1 == t0) return (kLeft + kRight) / 2;
        return kLeft + static_cast<double>(t - t0) / static_cast<double>(t1 - t0) * (kRight - kLeft);
    };

    std::string out = header(title);
    out += y_tick(vmin, vmin, vmax);
    out += y_tick(vmin / 2, vmin, vmax);
    out += y_tick(0.0, vmin, vmax);
    out += y_tick(vmax / 2, vmin, vmax);
    out += y_tick(vmax, vmin, vmax);
    out += x_tick_label(kLeft, format_iso8601(t0).substr(0, 10));
    if (t1 != t0) out += x_tick_label(kRight, format_iso8601(t1).substr(0, 10));
    out += axis_labels("window end", "r1");
    out += "<line class=\"axis\" x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kTop) + "\" x2=\"" +
           fmt2(kLeft) + "\" y2=\"" + fmt2(kBottom) + "\"/>\n";
    out += hline("zero", scale_y(0.0, vmin, vmax));

    // One polyline per contiguous run of usable windows; gaps break the line.
    std::string points;
    size_t run = 0;
    auto flush = [&]() {
        if (run > 0) out += "<polyline class=\"series\" points=\"" + points + "\"/>\n";
        points.clear();
        run = 0;
    };
    for (size_t i = 0; i < result.r1_values.size(); ++i) {
        const double r = result.r1_values[i];
        if (std::isnan(r)) {
            flush();
            continue;
        }
        if (run > 0) points += ' ';
        points += fmt2(x_of(result.window_end_timestamps[i])) + ',' + fmt2(scale_y(r, vmin, vmax));
        ++run;
    }
    flush();
    out += "</svg>\n";
    return out;
}

}  // namespace acorr
