#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acorr/experiments.hpp"
#include "acorr/io.hpp"
#include "acorr/marketdata.hpp"
#include "acorr/numfmt.hpp"
#include "acorr/report.hpp"
#include "acorr/series.hpp"
#include "acorr/stats.hpp"
#include "acorr/svg.hpp"
#include "acorr/synth.hpp"

namespace fs = std::filesystem;
using namespace acorr;

namespace {

bool use_color() {
    static const bool enabled = ::isatty(1) && std::getenv("NO_COLOR") == nullptr;
    return enabled;
}

std::string verdict_text(const std::string& label, bool rejected) {
    if (!use_color()) return label;
    return (rejected ? "\033[31m" : "\033[32m") + label + "\033[0m";
}

// Market ids may contain '/', so file names get a sanitized copy.
std::string sanitize_id(const std::string& id) {
    std::string out = id;
    for (char& c : out) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        if (!keep) c = '-';
    }
    return out;
}

std::string cell_file(const char* prefix, const std::string& market, TimeFrame tf,
                      const char* ext) {
    return std::string(prefix) + '_' + sanitize_id(market) + '_' + to_string(tf) + ext;
}

std::string acf_title(const std::string& market, TimeFrame tf) {
    return "ACF " + market + " " + to_string(tf);
}
std::string lb_title(const std::string& market, TimeFrame tf) {
    return "Ljung-Box p-values " + market + " " + to_string(tf);
}
std::string rolling_title(const std::string& market, TimeFrame tf) {
    return "Rolling lag-1 autocorrelation " + market + " " + to_string(tf);
}

TimestampUnit parse_ts_unit(const std::string& text) {
    if (text == "auto") return TimestampUnit::Auto;
    if (text == "s") return TimestampUnit::Seconds;
    if (text == "ms") return TimestampUnit::Millis;
    throw std::invalid_argument("unknown timestamp unit: " + text + " (expected auto|s|ms)");
}

bool parse_bool(const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw std::invalid_argument("not a boolean: " + text);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

struct AnalyzeOptions {
    std::map<std::string, std::string> inputs;  // market id -> path, sorted
    std::string format = "trades";
    TimeFrame input_tf = TimeFrame::M5;
    TimestampUnit ts_unit = TimestampUnit::Auto;
    std::vector<TimeFrame> tfs = {TimeFrame::M5, TimeFrame::H1, TimeFrame::D1, TimeFrame::W1};
    int max_lag = 30;
    double alpha = 0.05;
    int window_days = 365;
    int step = 1;
    double sign_threshold = 0.90;
    ReturnKind returns = ReturnKind::Log;
    std::string out_dir = ".";
    bool plots = false;
};

/// Flat key=value manifest. '#' lines are comments; unknown keys are errors so
/// typos surface instead of silently falling back to defaults.
void apply_manifest(const std::string& path, AnalyzeOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("manifest " + path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.rfind("input.", 0) == 0) {
            const std::string market = key.substr(6);
            if (market.empty() || value.empty())
                throw std::runtime_error("manifest " + path + ":" + std::to_string(lineno) +
                                         ": empty market or path");
            opt.inputs[market] = value;
        } else if (key == "format") {
            opt.format = value;
        } else if (key == "input_tf") {
            opt.input_tf = parse_time_frame(value);
        } else if (key == "ts_unit") {
            opt.ts_unit = parse_ts_unit(value);
        } else if (key == "tf") {
            opt.tfs.clear();
            for (const auto& item : split_list(value)) opt.tfs.push_back(parse_time_frame(item));
        } else if (key == "max_lag") {
            opt.max_lag = std::stoi(value);
        } else if (key == "alpha") {
            opt.alpha = std::stod(value);
        } else if (key == "window_days") {
            opt.window_days = std::stoi(value);
        } else if (key == "step") {
            opt.step = std::stoi(value);
        } else if (key == "sign_threshold") {
            opt.sign_threshold = std::stod(value);
        } else if (key == "returns") {
            opt.returns = parse_return_kind(value);
        } else if (key == "out") {
            opt.out_dir = value;
        } else if (key == "plots") {
            opt.plots = parse_bool(value);
        } else {
            throw std::runtime_error("manifest " + path + ":" + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        }
    }
}

void require_exists(const std::string& path) {
    if (!fs::exists(path)) throw std::runtime_error("input path does not exist: " + path);
}

void report_skips(const ParseReport& report, const std::string& path) {
    if (report.skipped.empty()) return;
    write_skip_report(std::cerr, report);
    std::cerr << "skipped " << report.skipped.size() << " row(s) in " << path << "\n";
}

int cmd_bars(const std::string& input, const std::string& format, TimeFrame input_tf,
             TimestampUnit ts_unit, const std::vector<std::string>& tf_names,
             const std::string& out_dir) {
    require_exists(input);
    if (format != "trades" && format != "candles")
        throw std::invalid_argument("unknown format: " + format + " (expected trades|candles)");
    std::vector<TimeFrame> tfs;
    for (const auto& name : tf_names) tfs.push_back(parse_time_frame(name));
    if (tfs.empty()) tfs.push_back(TimeFrame::M5);

    std::vector<Trade> trades;
    std::vector<Bar> base_bars;
    {
        GzFileLineReader reader(input);
        ParseReport report;
        if (format == "trades") {
            TradeFormat tf_fmt{ts_unit};
            trades = parse_trades(reader, tf_fmt, report);
        } else {
            base_bars = parse_candles(reader, input_tf, report);
        }
        report_skips(report, input);
    }

    fs::create_directories(out_dir);
    for (TimeFrame tf : tfs) {
        std::vector<Bar> bars;
        if (format == "trades") {
            bars = aggregate_trades(trades, tf);
        } else {
            bars = tf == input_tf ? base_bars : resample_bars(base_bars, tf);
        }
        std::ostringstream csv;
        write_candles_csv(csv, bars);
        const std::string path = (fs::path(out_dir) / (std::string("bars_") + to_string(tf) + ".csv")).string();
        write_file_atomic(path, csv.str());
        std::cout << "wrote " << path << " (" << bars.size() << " bars)\n";
    }
    return 0;
}

int cmd_synth(const std::string& kind, long long n, unsigned long long seed, double phi,
              double sigma, const std::string& tf_name, const std::string& out_dir) {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(kind);
    if (n <= 0) throw std::invalid_argument("synth: n must be positive");
    spec.n = static_cast<size_t>(n);
    spec.seed = seed;
    spec.phi = phi;
    spec.sigma = sigma;
    const TimeFrame tf = parse_time_frame(tf_name);

    const ReturnSeries series = generate_series(spec, tf);

    fs::create_directories(out_dir);
    const std::string name = std::string("synth_") + to_string(spec.kind) + "_n" +
                             std::to_string(spec.n) + "_seed" + std::to_string(spec.seed) + ".csv";
    const std::string path = (fs::path(out_dir) / name).string();
    std::ostringstream csv;
    write_return_series_csv(csv, series);
    write_file_atomic(path, csv.str());

    std::cout << "kind=" << to_string(spec.kind) << " n=" << spec.n << " seed=" << spec.seed;
    if (spec.kind == GeneratorKind::Ar1) std::cout << " phi=" << format_sig9(spec.phi);
    std::cout << " sigma=" << format_sig9(spec.sigma) << " tf=" << to_string(tf) << " out=" << path
              << "\n";
    return 0;
}

int cmd_analyze(const AnalyzeOptions& opt) {
    if (opt.inputs.empty())
        throw std::invalid_argument(
            "analyze: no inputs (pass --input/--market or manifest input.<MARKET> entries)");
    if (opt.format != "trades" && opt.format != "candles")
        throw std::invalid_argument("unknown format: " + opt.format + " (expected trades|candles)");

    ExperimentConfig base_cfg;
    base_cfg.market_id = opt.inputs.begin()->first;
    base_cfg.time_frames = opt.tfs;
    base_cfg.max_lag = opt.max_lag;
    base_cfg.alpha = opt.alpha;
    base_cfg.rolling_window_days = opt.window_days;
    base_cfg.rolling_step = opt.step;
    base_cfg.rolling_sign_threshold = opt.sign_threshold;
    base_cfg.return_kind = opt.returns;
    base_cfg.validate();

    for (const auto& [market, path] : opt.inputs) {
        (void)market;
        require_exists(path);
    }
    fs::create_directories(opt.out_dir);

    ResultDocument doc;
    for (const auto& [market, path] : opt.inputs) {
        (void)path;
        doc.markets.push_back(market);
    }
    doc.time_frames = opt.tfs;
    doc.max_lag = opt.max_lag;
    doc.alpha = opt.alpha;
    doc.rolling_window_days = opt.window_days;
    doc.rolling_step = opt.step;
    doc.rolling_sign_threshold = opt.sign_threshold;
    doc.return_kind = opt.returns;

    bool failures = false;
    for (const auto& [market, path] : opt.inputs) {
        std::vector<Trade> trades;
        std::vector<Bar> base_bars;
        bool input_ok = true;
        try {
            GzFileLineReader reader(path);
            ParseReport report;
            if (opt.format == "trades") {
                TradeFormat tf_fmt{opt.ts_unit};
                trades = parse_trades(reader, tf_fmt, report);
            } else {
                base_bars = parse_candles(reader, opt.input_tf, report);
            }
            report_skips(report, path);
        } catch (const std::exception& e) {
            input_ok = false;
            failures = true;
            for (TimeFrame tf : opt.tfs) doc.errors.push_back({market, to_string(tf), e.what()});
            std::cerr << "error: " << market << ": " << e.what() << "\n";
        }
        if (!input_ok) continue;

        MarketReport mr;
        mr.market_id = market;
        for (TimeFrame tf : opt.tfs) {
            try {
                std::vector<Bar> bars;
                if (opt.format == "trades") {
                    bars = aggregate_trades(trades, tf);
                } else {
                    bars = tf == opt.input_tf ? base_bars : resample_bars(base_bars, tf);
                }
                const ReturnSeries series = compute_returns(bars, opt.returns, market);

                ExperimentConfig cfg = base_cfg;
                cfg.market_id = market;
                cfg.time_frames = {tf};
                const AcfExperiment acf_exp = run_acf_experiment(series, cfg);
                const LbExperiment lb_exp = run_lb_experiment(series, cfg);
                const RollingExperiment rolling_exp = run_rolling_experiment(series, cfg);
                const EfficiencyVerdict verdict =
                    evaluate_verdict(acf_exp, lb_exp, rolling_exp, cfg);

                TimeFrameReport fr;
                fr.time_frame = tf;
                fr.n_returns = series.size();
                fr.first_timestamp = series.timestamps.front();
                fr.last_timestamp = series.timestamps.back();
                fr.acf = acf_exp;
                fr.lb = lb_exp;
                fr.rolling = rolling_exp;
                fr.verdict = verdict;
                fr.acf_csv = cell_file("acf", market, tf, ".csv");
                fr.lb_csv = cell_file("lb", market, tf, ".csv");
                fr.rolling_csv = cell_file("rolling", market, tf, ".csv");

                const fs::path out(opt.out_dir);
                write_file_atomic((out / fr.acf_csv).string(), render_acf_table(acf_exp));
                write_file_atomic((out / fr.lb_csv).string(), render_lb_table(lb_exp));
                write_file_atomic((out / fr.rolling_csv).string(), render_rolling_table(rolling_exp));
                if (opt.plots) {
                    write_file_atomic((out / cell_file("acf", market, tf, ".svg")).string(),
                                      render_acf_svg(acf_exp.result, acf_title(market, tf)));
                    write_file_atomic((out / cell_file("lb", market, tf, ".svg")).string(),
                                      render_lb_svg(lb_exp.result, lb_title(market, tf)));
                    write_file_atomic((out / cell_file("rolling", market, tf, ".svg")).string(),
                                      render_rolling_svg(rolling_exp.result, rolling_title(market, tf)));
                }

                std::cout << market << " " << to_string(tf) << ": n=" << series.size()
                          << " r1=" << format_sig9(acf_exp.result.at(1))
                          << " min_p=" << format_sig9(lb_exp.min_p) << " -> "
                          << verdict_text(verdict.label, verdict.emh_rejected) << "\n";
                mr.frames.push_back(std::move(fr));
            } catch (const std::exception& e) {
                failures = true;
                doc.errors.push_back({market, to_string(tf), e.what()});
                std::cerr << "error: " << market << " " << to_string(tf) << ": " << e.what()
                          << "\n";
            }
        }
        if (!mr.frames.empty()) doc.market_reports.push_back(std::move(mr));
    }

    const std::string doc_path = (fs::path(opt.out_dir) / "results.json").string();
    write_file_atomic(doc_path, render_result_document(doc));
    std::cout << "wrote " << doc_path << "\n";
    return failures ? 1 : 0;
}

double get_num(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::runtime_error(std::string("result document: missing number '") + key + "'");
    return j.at(key).get<double>();
}

std::vector<double> get_num_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::runtime_error(std::string("result document: missing array '") + key + "'");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) throw std::runtime_error(std::string("result document: non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

RollingAcfResult load_rolling_csv(const std::string& path, int window_len, int step) {
    GzFileLineReader reader(path);
    RollingAcfResult result;
    result.window_len = window_len;
    result.step = step;
    std::string line;
    bool header_seen = false;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "window_end,r1")
                throw std::runtime_error("rolling table " + path + ": unexpected header");
            header_seen = true;
            continue;
        }
        const size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("rolling table " + path + ": malformed row");
        result.window_end_timestamps.push_back(parse_iso8601(line.substr(0, comma)));
        const std::string value = line.substr(comma + 1);
        if (value == "nan") {
            result.r1_values.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            size_t used = 0;
            result.r1_values.push_back(std::stod(value, &used));
            if (used != value.size())
                throw std::runtime_error("rolling table " + path + ": malformed value");
        }
    }
    if (!header_seen || result.r1_values.empty())
        throw std::runtime_error("rolling table " + path + ": no data");
    return result;
}

int cmd_plot(const std::string& doc_path, const std::string& out_dir_flag) {
    require_exists(doc_path);
    std::ifstream in(doc_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("invalid result document " + doc_path + ": " + e.what());
    }
    if (!j.contains("markets") || !j.at("markets").is_array() || j.at("markets").empty())
        throw std::runtime_error("result document has no market results: " + doc_path);

    fs::path doc_dir = fs::path(doc_path).parent_path();
    if (doc_dir.empty()) doc_dir = ".";
    const std::string out_dir = out_dir_flag.empty() ? doc_dir.string() : out_dir_flag;

    // Render everything before writing anything, so a malformed document
    // leaves no partial output behind.
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& market_json : j.at("markets")) {
        const std::string market = market_json.at("market").get<std::string>();
        for (const auto& cell : market_json.at("time_frames")) {
            const TimeFrame tf = parse_time_frame(cell.at("time_frame").get<std::string>());

            const auto& acf_json = cell.at("acf");
            AcfResult acf_result;
            acf_result.n = static_cast<size_t>(get_num(acf_json, "n"));
            acf_result.max_lag = static_cast<int>(get_num(acf_json, "max_lag"));
            acf_result.alpha = get_num(acf_json, "alpha");
            acf_result.band_half_width = get_num(acf_json, "band_half_width");
            acf_result.coefficients = get_num_array(acf_json, "coefficients");
            if (acf_result.coefficients.size() != static_cast<size_t>(acf_result.max_lag))
                throw std::runtime_error("result document: coefficient count mismatch");

            const auto& lb_json = cell.at("ljung_box");
            LjungBoxResult lb_result;
            lb_result.n = static_cast<size_t>(get_num(lb_json, "n"));
            lb_result.max_lag = static_cast<int>(get_num(lb_json, "max_lag"));
            lb_result.alpha = get_num(lb_json, "alpha");
            lb_result.q_values = get_num_array(lb_json, "q_values");
            lb_result.p_values = get_num_array(lb_json, "p_values");
            if (lb_result.p_values.size() != static_cast<size_t>(lb_result.max_lag))
                throw std::runtime_error("result document: p-value count mismatch");
            for (double p : lb_result.p_values)
                lb_result.reject.push_back(p < lb_result.alpha ? 1 : 0);

            const auto& rolling_json = cell.at("rolling");
            const std::string series_csv = rolling_json.at("series_csv").get<std::string>();
            const RollingAcfResult rolling_result =
                load_rolling_csv((doc_dir / series_csv).string(),
                                 static_cast<int>(get_num(rolling_json, "window_len")),
                                 static_cast<int>(get_num(rolling_json, "step")));

            files.emplace_back(cell_file("acf", market, tf, ".svg"),
                               render_acf_svg(acf_result, acf_title(market, tf)));
            files.emplace_back(cell_file("lb", market, tf, ".svg"),
                               render_lb_svg(lb_result, lb_title(market, tf)));
            files.emplace_back(cell_file("rolling", market, tf, ".svg"),
                               render_rolling_svg(rolling_result, rolling_title(market, tf)));
        }
    }
    if (files.empty()) throw std::runtime_error("result document has no market results: " + doc_path);

    fs::create_directories(out_dir);
    for (const auto& [name, content] : files) {
        const std::string path = (fs::path(out_dir) / name).string();
        write_file_atomic(path, content);
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-bar autocorrelation toolkit: bar aggregation, ACF and Ljung-Box "
                 "analysis, rolling-window scans, synthetic series, SVG charts"};
    app.require_subcommand(1);

    // bars
    auto* bars = app.add_subcommand("bars", "Aggregate trades or resample candles into OHLCV bars");
    std::string bars_input;
    std::string bars_format = "trades";
    std::string bars_input_tf = "5m";
    std::string bars_ts_unit = "auto";
    std::vector<std::string> bars_tfs;
    std::string bars_out = ".";
    bars->add_option("--input", bars_input, "Trade or candle CSV (plain or .gz)")->required();
    bars->add_option("--format", bars_format, "Input kind: trades|candles");
    bars->add_option("--input-tf", bars_input_tf, "Native frame of a candle input");
    bars->add_option("--ts-unit", bars_ts_unit, "Trade timestamp unit: auto|s|ms");
    bars->add_option("--tf", bars_tfs, "Output time frame, repeatable (5m|1h|1d|1w)")
        ->delimiter(',');
    bars->add_option("--out", bars_out, "Output directory");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run the ACF, Ljung-Box and rolling experiments");
    std::string an_manifest;
    std::string an_input;
    std::string an_market = "market";
    std::string an_format;
    std::string an_input_tf;
    std::string an_ts_unit;
    std::vector<std::string> an_tfs;
    int an_max_lag = 0;
    double an_alpha = 0.0;
    int an_window_days = 0;
    int an_step = 0;
    double an_sign_threshold = 0.0;
    std::string an_returns;
    std::string an_out;
    bool an_plots = false;
    analyze->add_option("--manifest", an_manifest, "Flat key=value run manifest");
    analyze->add_option("--input", an_input, "Single input CSV (alternative to a manifest)");
    analyze->add_option("--market", an_market, "Market id for --input");
    auto* o_format = analyze->add_option("--format", an_format, "Input kind: trades|candles");
    auto* o_input_tf = analyze->add_option("--input-tf", an_input_tf, "Native frame of candle inputs");
    auto* o_ts_unit = analyze->add_option("--ts-unit", an_ts_unit, "Trade timestamp unit: auto|s|ms");
    auto* o_tfs = analyze->add_option("--tf", an_tfs, "Time frame, repeatable")->delimiter(',');
    auto* o_max_lag = analyze->add_option("--max-lag", an_max_lag, "Number of ACF lags");
    auto* o_alpha = analyze->add_option("--alpha", an_alpha, "Significance level");
    auto* o_window_days = analyze->add_option("--window-days", an_window_days, "Rolling window span");
    auto* o_step = analyze->add_option("--step", an_step, "Rolling window step in bars");
    auto* o_sign = analyze->add_option("--sign-threshold", an_sign_threshold,
                                       "Rolling sign-agreement threshold");
    auto* o_returns = analyze->add_option("--returns", an_returns, "Return kind: log|simple");
    auto* o_out = analyze->add_option("--out", an_out, "Output directory");
    auto* o_plots = analyze->add_flag("--plots", an_plots, "Also render SVG charts");

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a synthetic return series");
    std::string sy_kind = "white";
    long long sy_n = 0;
    unsigned long long sy_seed = 0;
    double sy_phi = 0.0;
    double sy_sigma = 1.0;
    std::string sy_tf = "1d";
    std::string sy_out = ".";
    synth->add_option("--kind", sy_kind, "white|ar1|rw");
    synth->add_option("--n", sy_n, "Series length")->required();
    synth->add_option("--seed", sy_seed, "RNG seed");
    synth->add_option("--phi", sy_phi, "AR(1) coefficient, |phi| < 1");
    synth->add_option("--sigma", sy_sigma, "Innovation scale");
    synth->add_option("--tf", sy_tf, "Time frame for the generated timestamps");
    synth->add_option("--out", sy_out, "Output directory");

    // plot
    auto* plot = app.add_subcommand("plot", "Render SVG charts from a result document");
    std::string pl_input;
    std::string pl_out;
    plot->add_option("--input", pl_input, "results.json from analyze")->required();
    plot->add_option("--out", pl_out, "Output directory (default: beside the document)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bars) {
            return cmd_bars(bars_input, bars_format, parse_time_frame(bars_input_tf),
                            parse_ts_unit(bars_ts_unit), bars_tfs, bars_out);
        }
        if (*analyze) {
            AnalyzeOptions opt;
            if (!an_manifest.empty()) apply_manifest(an_manifest, opt);
            if (!an_input.empty()) opt.inputs[an_market] = an_input;
            if (o_format->count()) opt.format = an_format;
            if (o_input_tf->count()) opt.input_tf = parse_time_frame(an_input_tf);
            if (o_ts_unit->count()) opt.ts_unit = parse_ts_unit(an_ts_unit);
            if (o_tfs->count()) {
                opt.tfs.clear();
                for (const auto& name : an_tfs) opt.tfs.push_back(parse_time_frame(name));
            }
            if (o_max_lag->count()) opt.max_lag = an_max_lag;
            if (o_alpha->count()) opt.alpha = an_alpha;
            if (o_window_days->count()) opt.window_days = an_window_days;
            if (o_step->count()) opt.step = an_step;
            if (o_sign->count()) opt.sign_threshold = an_sign_threshold;
            if (o_returns->count()) opt.returns = parse_return_kind(an_returns);
            if (o_out->count()) opt.out_dir = an_out;
            if (o_plots->count()) opt.plots = an_plots;
            return cmd_analyze(opt);
        }
        if (*synth) {
            return cmd_synth(sy_kind, sy_n, sy_seed, sy_phi, sy_sigma, sy_tf, sy_out);
        }
        if (*plot) {
            return cmd_plot(pl_input, pl_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
