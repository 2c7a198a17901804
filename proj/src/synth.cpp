#include "acorr/synth.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "acorr/special.hpp"

namespace acorr {

namespace {
constexpr size_t kAr1Burnin = 1000;
}

double Rng::gaussian() {
    return normal_quantile(uniform01());
}

const char* to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::WhiteNoise: return "white";
        case GeneratorKind::Ar1: return "ar1";
        case GeneratorKind::RandomWalk: return "rw";
    }
    return "?";
}

GeneratorKind parse_generator_kind(std::string_view text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "white" || t == "whitenoise" || t == "white_noise") return GeneratorKind::WhiteNoise;
    if (t == "ar1") return GeneratorKind::Ar1;
    if (t == "rw" || t == "randomwalk" || t == "random_walk") return GeneratorKind::RandomWalk;
    throw std::invalid_argument("unknown generator kind: " + std::string(text));
}

ReturnSeries generate_series(const GeneratorSpec& spec, TimeFrame tf) {
    if (spec.n == 0) throw std::invalid_argument("generate_series: n must be positive");
    if (!(spec.sigma > 0.0)) throw std::invalid_argument("generate_series: sigma must be positive");
    if (spec.kind == GeneratorKind::Ar1 && !(std::fabs(spec.phi) < 1.0)) {
        throw std::invalid_argument("generate_series: |phi| must be < 1");
    }

    Rng rng(spec.seed);
    ReturnSeries series;
    series.market_id = std::string("synth-") + to_string(spec.kind);
    series.time_frame = tf;
    series.kind = ReturnKind::Log;
    series.values.reserve(spec.n);
    series.timestamps.reserve(spec.n);

    switch (spec.kind) {
        case GeneratorKind::WhiteNoise:
        case GeneratorKind::RandomWalk:
            // A random walk's log returns are the iid innovations themselves.
            for (size_t i = 0; i < spec.n; ++i) {
                series.values.push_back(spec.sigma * rng.gaussian());
            }
            break;
        case GeneratorKind::Ar1: {
            double x = 0.0;
            for (size_t i = 0; i < kAr1Burnin + spec.n; ++i) {
                x = spec.phi * x + spec.sigma * rng.gaussian();
                if (i >= kAr1Burnin) series.values.push_back(x);
            }
            break;
        }
    }

    const int64_t frame = duration_ms(tf);
    for (size_t i = 0; i < spec.n; ++i) {
        series.timestamps.push_back(static_cast<int64_t>(i + 1) * frame);
    }
    return series;
}

double theoretical_acf_ar1(double phi, int lag) {
    if (!(std::fabs(phi) < 1.0)) throw std::invalid_argument("theoretical_acf_ar1: |phi| must be < 1");
    if (lag < 0) throw std::invalid_argument("theoretical_acf_ar1: lag must be >= 0");
    return std::pow(phi, lag);
}

}  // namespace acorr
