#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "acorr/report.hpp"
#include "acorr/svg.hpp"

using namespace acorr;
using nlohmann::json;

namespace {

size_t count_of(const std::string& haystack, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

AcfExperiment make_acf_exp() {
    AcfExperiment exp;
    exp.result.n = 5;
    exp.result.max_lag = 2;
    exp.result.coefficients = {0.4, -0.1};
    exp.result.band_half_width = 0.8765;
    exp.result.alpha = 0.05;
    exp.bonferroni_band = 1.1;
    return exp;
}

LbExperiment make_lb_exp() {
    LbExperiment exp;
    exp.result.n = 5;
    exp.result.max_lag = 2;
    exp.result.q_values = {1.4, 1.5166667};
    exp.result.p_values = {0.25, 0.46};
    exp.result.alpha = 0.05;
    exp.result.reject = {0, 0};
    exp.min_p = 0.25;
    exp.min_p_lag = 1;
    return exp;
}

RollingExperiment make_rolling_exp() {
    RollingExperiment exp;
    exp.result.window_len = 5;
    exp.result.step = 1;
    exp.result.window_end_timestamps = {5 * 86400000LL, 6 * 86400000LL};
    exp.result.r1_values = {0.4, std::numeric_limits<double>::quiet_NaN()};
    exp.window_count = 2;
    exp.gap_windows = 1;
    exp.positive_fraction = 1.0;
    exp.shared_sign_fraction = 1.0;
    exp.median_abs_r1 = 0.4;
    exp.band_half_width = 0.8765;
    return exp;
}

TimeFrameReport make_cell(TimeFrame tf) {
    TimeFrameReport f;
    f.time_frame = tf;
    f.n_returns = 5;
    f.first_timestamp = duration_ms(tf);
    f.last_timestamp = 5 * duration_ms(tf);
    f.acf = make_acf_exp();
    f.lb = make_lb_exp();
    f.rolling = make_rolling_exp();
    f.verdict.label = "EMH not rejected";
    f.acf_csv = "acf_test.csv";
    f.lb_csv = "lb_test.csv";
    f.rolling_csv = "rolling_test.csv";
    return f;
}

ResultDocument make_doc() {
    ResultDocument doc;
    doc.markets = {"zeta", "alpha"};
    doc.time_frames = {TimeFrame::M5, TimeFrame::H1};
    MarketReport zeta;
    zeta.market_id = "zeta";
    zeta.frames = {make_cell(TimeFrame::H1), make_cell(TimeFrame::M5)};
    MarketReport alpha;
    alpha.market_id = "alpha";
    alpha.frames = {make_cell(TimeFrame::M5)};
    doc.market_reports = {zeta, alpha};  // deliberately unsorted
    doc.errors.push_back({"alpha", "1h", "too few bars"});
    return doc;
}

}  // namespace

TEST_CASE("result document parses and carries the config") {
    const std::string text = render_result_document(make_doc());
    const json j = json::parse(text);

    CHECK(j["schema_version"] == 1);
    CHECK(j["config"]["markets"] == json::array({"zeta", "alpha"}));
    CHECK(j["config"]["time_frames"] == json::array({"5m", "1h"}));
    CHECK(j["config"]["max_lag"] == 30);
    CHECK(j["config"]["alpha"] == doctest::Approx(0.05));
    CHECK(j["config"]["rolling_window_days"] == 365);
    CHECK(j["config"]["rolling_step"] == 1);
    CHECK(j["config"]["returns"] == "log");

    REQUIRE(j["markets"].size() == 2);
    REQUIRE(j["errors"].size() == 1);
    CHECK(j["errors"][0]["market"] == "alpha");
    CHECK(j["errors"][0]["time_frame"] == "1h");
    CHECK(j["errors"][0]["message"] == "too few bars");

    const json& cell = j["markets"][1]["time_frames"][0];
    CHECK(cell["n_returns"] == 5);
    CHECK(cell["acf"]["coefficients"].size() == 2);
    CHECK(cell["acf"]["coefficients"][0] == doctest::Approx(0.4));
    CHECK(cell["acf"]["table_csv"] == "acf_test.csv");
    CHECK(cell["ljung_box"]["min_p"] == doctest::Approx(0.25));
    CHECK(cell["ljung_box"]["min_p_lag"] == 1);
    CHECK(cell["rolling"]["gap_windows"] == 1);
    CHECK(cell["rolling"]["series_csv"] == "rolling_test.csv");
    CHECK(cell["verdict"]["label"] == "EMH not rejected");
    CHECK(cell["verdict"]["emh_rejected"] == false);
}

TEST_CASE("markets and frames are sorted in the rendered document") {
    const std::string text = render_result_document(make_doc());
    const json j = json::parse(text);
    CHECK(j["markets"][0]["market"] == "alpha");
    CHECK(j["markets"][1]["market"] == "zeta");
    const json& zeta_frames = j["markets"][1]["time_frames"];
    REQUIRE(zeta_frames.size() == 2);
    CHECK(zeta_frames[0]["time_frame"] == "5m");
    CHECK(zeta_frames[1]["time_frame"] == "1h");
}

TEST_CASE("rendering twice yields identical bytes") {
    const ResultDocument doc = make_doc();
    CHECK(render_result_document(doc) == render_result_document(doc));
}

TEST_CASE("string fields are json-escaped") {
    ResultDocument doc = make_doc();
    doc.errors[0].message = "line\t1: \"quote\" and \\slash\nnext";
    const std::string text = render_result_document(doc);
    CHECK(text.find("line\\t1: \\\"quote\\\" and \\\\slash\\nnext") != std::string::npos);
    const json j = json::parse(text);
    CHECK(j["errors"][0]["message"] == "line\t1: \"quote\" and \\slash\nnext");
}

TEST_CASE("numbers appear at nine significant digits and stamps as iso-8601") {
    ResultDocument doc = make_doc();
    doc.market_reports[0].frames[0].acf.result.coefficients[0] = 1.0 / 3.0;
    const std::string text = render_result_document(doc);
    CHECK(text.find("0.333333333") != std::string::npos);
    CHECK(text.find("0.3333333333") == std::string::npos);
    // D1-free doc: the 5m cell's first stamp is 1970-01-01T00:05:00Z.
    CHECK(text.find("\"first_return\": \"1970-01-01T00:05:00Z\"") != std::string::npos);
}

TEST_CASE("non-finite numbers are rejected rather than emitted") {
    ResultDocument doc = make_doc();
    doc.market_reports[0].frames[0].acf.result.coefficients[0] =
        std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(render_result_document(doc), std::invalid_argument);
}

TEST_CASE("breach note marks unadjusted-only breaches") {
    ResultDocument doc = make_doc();
    auto& acf = doc.market_reports[1].frames[0].acf;

    acf.breach_lags = {3};
    acf.bonferroni_breach_lags.clear();
    std::string text = render_result_document(doc);
    CHECK(text.find("breach_note") != std::string::npos);
    CHECK(text.find("expected under null at 5% rate") != std::string::npos);

    acf.bonferroni_breach_lags = {3};
    text = render_result_document(doc);
    CHECK(text.find("breach_note") == std::string::npos);

    acf.breach_lags.clear();
    acf.bonferroni_breach_lags.clear();
    text = render_result_document(doc);
    CHECK(text.find("breach_note") == std::string::npos);
}

TEST_CASE("acf table lists one row per lag with breach flags") {
    AcfExperiment exp = make_acf_exp();
    exp.result.coefficients = {0.9, -0.1};
    exp.breach_lags = {1};
    const std::string table = render_acf_table(exp);
    CHECK(table.find("# n=5 alpha=0.05 band=0.8765 bonferroni_band=1.1\n") == 0);
    CHECK(table.find("lag,r,breach,bonferroni_breach\n") != std::string::npos);
    CHECK(table.find("1,0.9,1,0\n") != std::string::npos);
    CHECK(table.find("2,-0.1,0,0\n") != std::string::npos);
    CHECK(count_of(table, "\n") == 4);
}

TEST_CASE("ljung-box table lists q, p, and the reject flag") {
    LbExperiment exp = make_lb_exp();
    exp.result.q_values = {1.5, 2.5};
    exp.result.p_values = {0.25, 0.0001};
    exp.result.reject = {0, 1};
    const std::string table = render_lb_table(exp);
    CHECK(table.find("# n=5 alpha=0.05\n") == 0);
    CHECK(table.find("lag,q,p,reject\n") != std::string::npos);
    CHECK(table.find("1,1.5,0.25,0\n") != std::string::npos);
    CHECK(table.find("2,2.5,0.0001,1\n") != std::string::npos);
}

TEST_CASE("rolling table writes iso stamps and nan gaps") {
    const RollingExperiment exp = make_rolling_exp();
    const std::string table = render_rolling_table(exp);
    CHECK(table.find("# window_len=5 step=1 band=0.8765\n") == 0);
    CHECK(table.find("window_end,r1\n") != std::string::npos);
    CHECK(table.find("1970-01-06T00:00:00Z,0.4\n") != std::string::npos);
    CHECK(table.find("1970-01-07T00:00:00Z,nan\n") != std::string::npos);
}

TEST_CASE("acf svg carries one bar per lag and two band lines") {
    AcfResult result;
    result.n = 100;
    result.max_lag = 10;
    result.coefficients = {0.3, -0.2, 0.1, 0.05, -0.05, 0.02, -0.02, 0.01, 0.0, 0.15};
    result.band_half_width = 0.196;
    const std::string svg = render_acf_svg(result, "acf <demo> & co");

    CHECK(svg.find("viewBox=\"0 0 1200 600\"") != std::string::npos);
    CHECK(count_of(svg, "<rect class=\"bar\"") == 10);
    CHECK(count_of(svg, "<line class=\"band\"") == 2);
    CHECK(svg.find("acf &lt;demo&gt; &amp; co") != std::string::npos);
    CHECK(render_acf_svg(result, "acf <demo> & co") == svg);
}

TEST_CASE("ljung-box svg keeps the series above the threshold when every p is tiny") {
    LjungBoxResult result;
    result.n = 100;
    result.max_lag = 8;
    result.alpha = 0.05;
    for (int k = 0; k < 8; ++k) {
        result.q_values.push_back(50.0 + k);
        result.p_values.push_back(0.001);
        result.reject.push_back(1);
    }
    const std::string svg = render_lb_svg(result, "lb");
    CHECK(count_of(svg, "<polyline class=\"series\"") == 1);
    CHECK(count_of(svg, "<line class=\"threshold\"") == 1);

    // The threshold line's y coordinate.
    const size_t th = svg.find("<line class=\"threshold\"");
    const size_t y1 = svg.find("y1=\"", th) + 4;
    const double threshold_y = std::stod(svg.substr(y1));

    // Every series point must sit below the threshold on screen (larger y).
    const size_t poly = svg.find("<polyline class=\"series\" points=\"");
    const size_t start = poly + std::string("<polyline class=\"series\" points=\"").size();
    const size_t end = svg.find('"', start);
    std::string points = svg.substr(start, end - start);
    size_t seen = 0;
    size_t pos = 0;
    while (pos < points.size()) {
        const size_t comma = points.find(',', pos);
        REQUIRE(comma != std::string::npos);
        size_t space = points.find(' ', comma);
        if (space == std::string::npos) space = points.size();
        const double y = std::stod(points.substr(comma + 1, space - comma - 1));
        CHECK(y > threshold_y);
        ++seen;
        pos = space + 1;
    }
    CHECK(seen == 8);
}

TEST_CASE("rolling svg splits polylines at gaps") {
    RollingAcfResult result;
    result.window_len = 5;
    result.step = 1;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    result.r1_values = {0.1, 0.2, nan, -0.1, -0.2};
    for (int i = 0; i < 5; ++i) result.window_end_timestamps.push_back((i + 5) * 86400000LL);
    const std::string svg = render_rolling_svg(result, "rolling");
    CHECK(count_of(svg, "<polyline class=\"series\"") == 2);
    CHECK(count_of(svg, "<line class=\"zero\"") == 1);
    CHECK(svg.find("1970-01-06") != std::string::npos);
}

TEST_CASE("rolling svg centers a single window") {
    RollingAcfResult result;
    result.window_len = 5;
    result.step = 1;
    result.r1_values = {0.5};
    result.window_end_timestamps = {86400000LL};
    const std::string svg = render_rolling_svg(result, "one");
    CHECK(svg.find("625.00") != std::string::npos);
    CHECK(count_of(svg, "<polyline class=\"series\"") == 1);
}

TEST_CASE("empty results are rejected by the svg renderers") {
    CHECK_THROWS_AS(render_acf_svg(AcfResult{}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(render_lb_svg(LjungBoxResult{}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(render_rolling_svg(RollingAcfResult{}, "x"), std::invalid_argument);
}
