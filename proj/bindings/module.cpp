#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <vector>

#include "acorr/marketdata.hpp"
#include "acorr/series.hpp"
#include "acorr/special.hpp"
#include "acorr/stats.hpp"
#include "acorr/synth.hpp"
#include "acorr/timeutil.hpp"

namespace py = pybind11;
using namespace acorr;

namespace {

py::dict acf_py(const std::vector<double>& values, int max_lag, double alpha) {
    ReturnSeries series;
    series.market_id = "py";
    series.values = values;
    series.timestamps.resize(values.size());
    const AcfResult r = acf(series, max_lag, alpha);
    py::dict out;
    out["n"] = r.n;
    out["max_lag"] = r.max_lag;
    out["coefficients"] = r.coefficients;
    out["band_half_width"] = r.band_half_width;
    out["alpha"] = r.alpha;
    return out;
}

py::dict ljung_box_py(const std::vector<double>& values, int max_lag, double alpha) {
    const LjungBoxResult r = ljung_box_values(values, max_lag, alpha);
    py::dict out;
    out["n"] = r.n;
    out["max_lag"] = r.max_lag;
    out["q_values"] = r.q_values;
    out["p_values"] = r.p_values;
    std::vector<bool> reject(r.reject.begin(), r.reject.end());
    out["reject"] = reject;
    out["alpha"] = r.alpha;
    return out;
}

py::dict aggregate_trades_py(const std::vector<int64_t>& timestamps,
                             const std::vector<double>& prices,
                             const std::vector<double>& sizes, const std::string& tf_name) {
    if (timestamps.size() != prices.size() || prices.size() != sizes.size())
        throw std::invalid_argument("aggregate_trades: input arrays differ in length");
    std::vector<Trade> trades(timestamps.size());
    for (size_t i = 0; i < trades.size(); ++i)
        trades[i] = Trade{timestamps[i], prices[i], sizes[i]};
    const std::vector<Bar> bars = aggregate_trades(trades, parse_time_frame(tf_name));
    std::vector<int64_t> open_time;
    std::vector<double> open, high, low, close, volume;
    std::vector<int64_t> trade_count;
    for (const Bar& b : bars) {
        open_time.push_back(b.open_time);
        open.push_back(b.open);
        high.push_back(b.high);
        low.push_back(b.low);
        close.push_back(b.close);
        volume.push_back(b.volume);
        trade_count.push_back(b.trade_count);
    }
    py::dict out;
    out["open_time"] = open_time;
    out["open"] = open;
    out["high"] = high;
    out["low"] = low;
    out["close"] = close;
    out["volume"] = volume;
    out["trade_count"] = trade_count;
    return out;
}

std::vector<double> returns_from_closes_py(const std::vector<double>& closes,
                                           const std::string& kind_name) {
    const ReturnKind kind = parse_return_kind(kind_name);
    std::vector<Bar> bars(closes.size());
    for (size_t i = 0; i < closes.size(); ++i) {
        bars[i].open_time = static_cast<int64_t>(i) * duration_ms(TimeFrame::D1);
        bars[i].time_frame = TimeFrame::D1;
        bars[i].open = bars[i].high = bars[i].low = bars[i].close = closes[i];
    }
    return compute_returns(bars, kind, "py").values;
}

std::vector<double> generate_series_py(const std::string& kind_name, size_t n, uint64_t seed,
                                       double phi, double sigma) {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(kind_name);
    spec.n = n;
    spec.seed = seed;
    spec.phi = phi;
    spec.sigma = sigma;
    return generate_series(spec).values;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Autocorrelation toolkit core: ACF, Ljung-Box, rolling scans, bar aggregation";

    m.def("acf", &acf_py, py::arg("values"), py::arg("max_lag"), py::arg("alpha") = 0.05,
          "Sample ACF for lags 1..max_lag with the flat confidence band half-width");
    m.def("ljung_box", &ljung_box_py, py::arg("values"), py::arg("max_lag"),
          py::arg("alpha") = 0.05, "Cumulative Ljung-Box Q statistics and p-values per lag");
    m.def(
        "rolling_acf1",
        [](const std::vector<double>& values, int window_len, int step) {
            return rolling_acf1_values(values, window_len, step);
        },
        py::arg("values"), py::arg("window_len"), py::arg("step") = 1,
        "Lag-1 ACF over sliding windows; zero-variance windows yield NaN");
    m.def("confidence_band", &confidence_band, py::arg("n"), py::arg("alpha") = 0.05,
          "Half-width of the flat ACF confidence band, z_{1-alpha/2}/sqrt(n)");

    m.def("chi2_cdf", &chi2_cdf, py::arg("x"), py::arg("k"));
    m.def("chi2_sf", &chi2_sf, py::arg("x"), py::arg("k"),
          "Upper tail probability, computed directly (no 1-cdf cancellation)");
    m.def("chi2_quantile", &chi2_quantile, py::arg("p"), py::arg("k"));
    m.def("normal_quantile", &normal_quantile, py::arg("p"));

    m.def("aggregate_trades", &aggregate_trades_py, py::arg("timestamps_ms"), py::arg("prices"),
          py::arg("sizes"), py::arg("tf"),
          "OHLCV bars from timestamp-sorted trades; empty buckets emit no bar");
    m.def("returns_from_closes", &returns_from_closes_py, py::arg("closes"),
          py::arg("kind") = "log");

    m.def("generate_series", &generate_series_py, py::arg("kind"), py::arg("n"), py::arg("seed"),
          py::arg("phi") = 0.0, py::arg("sigma") = 1.0,
          "Deterministic synthetic returns: white | ar1 | rw");
    m.def("theoretical_acf_ar1", &theoretical_acf_ar1, py::arg("phi"), py::arg("lag"));

    m.def(
        "bucket_start",
        [](int64_t ts_ms, const std::string& tf) { return bucket_start(ts_ms, parse_time_frame(tf)); },
        py::arg("ts_ms"), py::arg("tf"), "Start of the bar bucket containing ts_ms");
    m.def("format_iso8601", &format_iso8601, py::arg("ts_ms"));
    m.def("parse_iso8601", [](const std::string& s) { return parse_iso8601(s); }, py::arg("text"));
}
