#include "acorr/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "acorr/numfmt.hpp"

namespace acorr {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("result document: non-finite number");
    return format_sig9(v);
}

class JsonWriter {
  public:
    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array(const std::string& key) {
        item();
        indent();
        out_ += '"' + json_escape(key) + "\": ";
        out_ += '[';
        depth_++;
        fresh_ = true;
    }
    void begin_object(const std::string& key) {
        item();
        indent();
        out_ += '"' + json_escape(key) + "\": ";
        out_ += '{';
        depth_++;
        fresh_ = true;
    }
    void begin_array_item_object() { open('{'); }
    void end_array() { close(']'); }

    void field(const std::string& key, const std::string& raw) {
        item();
        indent();
        out_ += '"' + json_escape(key) + "\": " + raw;
    }
    void str(const std::string& key, const std::string& value) {
        field(key, '"' + json_escape(value) + '"');
    }
    void num(const std::string& key, double value) { field(key, json_number(value)); }
    void integer(const std::string& key, long long value) { field(key, std::to_string(value)); }
    void boolean(const std::string& key, bool value) { field(key, value ? "true" : "false"); }

    void int_array(const std::string& key, const std::vector<int>& values) {
        std::string raw = "[";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) raw += ", ";
            raw += std::to_string(values[i]);
        }
        raw += ']';
        field(key, raw);
    }
    void num_array(const std::string& key, const std::vector<double>& values) {
        std::string raw = "[";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) raw += ", ";
            raw += json_number(values[i]);
        }
        raw += ']';
        field(key, raw);
    }
    void str_array(const std::string& key, const std::vector<std::string>& values) {
        std::string raw = "[";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) raw += ", ";
            raw += '"' + json_escape(values[i]) + '"';
        }
        raw += ']';
        field(key, raw);
    }

    std::string take() {
        out_ += '\n';
        return std::move(out_);
    }

  private:
    void open(char c) {
        item();
        indent();
        out_ += c;
        depth_++;
        fresh_ = true;
    }
    void close(char c) {
        depth_--;
        out_ += '\n';
        for (int i = 0; i < depth_; ++i) out_ += "  ";
        out_ += c;
        fresh_ = false;
    }
    void item() {
        if (!fresh_) out_ += ',';
        fresh_ = false;
    }
    void indent() {
        if (!out_.empty()) out_ += '\n';
        for (int i = 0; i < depth_; ++i) out_ += "  ";
    }

    std::string out_;
    int depth_ = 0;
    bool fresh_ = true;
};

void write_acf_section(JsonWriter& w, const AcfExperiment& exp, const std::string& csv) {
    w.begin_object("acf");
    w.integer("n", static_cast<long long>(exp.result.n));
    w.integer("max_lag", exp.result.max_lag);
    w.num("alpha", exp.result.alpha);
    w.num("band_half_width", exp.result.band_half_width);
    w.num("bonferroni_band_half_width", exp.bonferroni_band);
    w.num_array("coefficients", exp.result.coefficients);
    w.int_array("breach_lags", exp.breach_lags);
    if (!exp.breach_lags.empty() && exp.bonferroni_breach_lags.empty())
        w.str("breach_note", "expected under null at 5% rate");
    w.int_array("bonferroni_breach_lags", exp.bonferroni_breach_lags);
    w.boolean("violated", exp.violated);
    if (!csv.empty()) w.str("table_csv", csv);
    w.end_object();
}

void write_lb_section(JsonWriter& w, const LbExperiment& exp, const std::string& csv) {
    w.begin_object("ljung_box");
    w.integer("n", static_cast<long long>(exp.result.n));
    w.integer("max_lag", exp.result.max_lag);
    w.num("alpha", exp.result.alpha);
    w.num_array("q_values", exp.result.q_values);
    w.num_array("p_values", exp.result.p_values);
    w.num("min_p", exp.min_p);
    w.integer("min_p_lag", exp.min_p_lag);
    w.boolean("violated", exp.violated);
    if (!csv.empty()) w.str("table_csv", csv);
    w.end_object();
}

void write_rolling_section(JsonWriter& w, const RollingExperiment& exp, const std::string& csv) {
    w.begin_object("rolling");
    w.integer("window_len", exp.result.window_len);
    w.integer("step", exp.result.step);
    w.integer("window_count", static_cast<long long>(exp.window_count));
    w.integer("gap_windows", static_cast<long long>(exp.gap_windows));
    w.num("positive_fraction", exp.positive_fraction);
    w.num("negative_fraction", exp.negative_fraction);
    w.num("shared_sign_fraction", exp.shared_sign_fraction);
    w.num("median_abs_r1", exp.median_abs_r1);
    w.num("band_half_width", exp.band_half_width);
    w.boolean("violated", exp.violated);
    if (!csv.empty()) w.str("series_csv", csv);
    w.end_object();
}

void write_verdict_section(JsonWriter& w, const EfficiencyVerdict& v) {
    w.begin_object("verdict");
    w.boolean("acf_condition_violated", v.acf_condition_violated);
    w.boolean("lb_condition_violated", v.lb_condition_violated);
    w.boolean("rolling_condition_violated", v.rolling_condition_violated);
    w.int_array("acf_breach_lags", v.acf_breach_lags);
    w.num("lb_min_p", v.lb_min_p);
    w.num("rolling_sign_fraction", v.rolling_sign_fraction);
    w.boolean("emh_rejected", v.emh_rejected);
    w.str("label", v.label);
    w.end_object();
}

}  // namespace

std::string render_result_document(const ResultDocument& doc) {
    std::vector<std::string> tf_names;
    tf_names.reserve(doc.time_frames.size());
    for (TimeFrame tf : doc.time_frames) tf_names.push_back(to_string(tf));

    std::vector<const MarketReport*> markets;
    markets.reserve(doc.market_reports.size());
    for (const auto& m : doc.market_reports) markets.push_back(&m);
    std::sort(markets.begin(), markets.end(),
              [](const MarketReport* a, const MarketReport* b) { return a->market_id < b->market_id; });

    JsonWriter w;
    w.begin_object();
    w.integer("schema_version", 1);

    w.begin_object("config");
    w.str_array("markets", doc.markets);
    w.str_array("time_frames", tf_names);
    w.integer("max_lag", doc.max_lag);
    w.num("alpha", doc.alpha);
    w.integer("rolling_window_days", doc.rolling_window_days);
    w.integer("rolling_step", doc.rolling_step);
    w.num("rolling_sign_threshold", doc.rolling_sign_threshold);
    w.str("returns", to_string(doc.return_kind));
    w.end_object();

    w.begin_array("markets");
    for (const MarketReport* market : markets) {
        std::vector<const TimeFrameReport*> frames;
        frames.reserve(market->frames.size());
        for (const auto& f : market->frames) frames.push_back(&f);
        std::sort(frames.begin(), frames.end(), [](const TimeFrameReport* a, const TimeFrameReport* b) {
            return duration_ms(a->time_frame) < duration_ms(b->time_frame);
        });

        w.begin_array_item_object();
        w.str("market", market->market_id);
        w.begin_array("time_frames");
        for (const TimeFrameReport* f : frames) {
            w.begin_array_item_object();
            w.str("time_frame", to_string(f->time_frame));
            w.integer("n_returns", static_cast<long long>(f->n_returns));
            w.str("first_return", format_iso8601(f->first_timestamp));
            w.str("last_return", format_iso8601(f->last_timestamp));
            write_acf_section(w, f->acf, f->acf_csv);
            write_lb_section(w, f->lb, f->lb_csv);
            write_rolling_section(w, f->rolling, f->rolling_csv);
            write_verdict_section(w, f->verdict);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.begin_array("errors");
    for (const auto& err : doc.errors) {
        w.begin_array_item_object();
        w.str("market", err.market_id);
        w.str("time_frame", err.time_frame);
        w.str("message", err.message);
        w.end_object();
    }
    w.end_array();

    w.end_object();
    return w.take();
}

std::string render_acf_table(const AcfExperiment& exp) {
    std::string out;
    out += "# n=" + std::to_string(exp.result.n) + " alpha=" + format_sig9(exp.result.alpha) +
           " band=" + format_sig9(exp.result.band_half_width) +
           " bonferroni_band=" + format_sig9(exp.bonferroni_band) + "\n";
    out += "lag,r,breach,bonferroni_breach\n";
    for (int k = 1; k <= exp.result.max_lag; ++k) {
        const double r = exp.result.at(k);
        const bool breach = std::fabs(r) > exp.result.band_half_width;
        const bool adj = std::fabs(r) > exp.bonferroni_band;
        out += std::to_string(k) + ',' + format_sig9(r) + ',' + (breach ? '1' : '0') + ',' +
               (adj ? '1' : '0') + '\n';
    }
    return out;
}

std::string render_lb_table(const LbExperiment& exp) {
    std::string out;
    out += "# n=" + std::to_string(exp.result.n) + " alpha=" + format_sig9(exp.result.alpha) + "\n";
    out += "lag,q,p,reject\n";
    for (int k = 1; k <= exp.result.max_lag; ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        out += std::to_string(k) + ',' + format_sig9(exp.result.q_values[i]) + ',' +
               format_sig9(exp.result.p_values[i]) + ',' + (exp.result.reject[i] ? '1' : '0') + '\n';
    }
    return out;
}

std::string render_rolling_table(const RollingExperiment& exp) {
    std::string out;
    out += "# window_len=" + std::to_string(exp.result.window_len) +
           " step=" + std::to_string(exp.result.step) +
           " band=" + format_sig9(exp.band_half_width) + "\n";
    out += "window_end,r1\n";
    for (size_t i = 0; i < exp.result.r1_values.size(); ++i) {
        const double r1 = exp.result.r1_values[i];
        out += format_iso8601(exp.result.window_end_timestamps[i]) + ',';
        out += std::isnan(r1) ? "nan" : format_sig9(r1);
        out += '\n';
    }
    return out;
}

}  // namespace acorr
