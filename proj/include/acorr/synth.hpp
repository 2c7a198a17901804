#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "acorr/series.hpp"

namespace acorr {

/// Deterministic random source: mt19937_64 (sequence fixed by the standard)
/// mapped through the inverse normal CDF, so identical seeds reproduce
/// identical streams with no rejection loops.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1), 53-bit resolution, never exactly 0 or 1.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double gaussian();

private:
    std::mt19937_64 engine_;
};

enum class GeneratorKind { WhiteNoise, Ar1, RandomWalk };

const char* to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view text);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::WhiteNoise;
    size_t n = 0;
    uint64_t seed = 0;
    double phi = 0.0;    // AR1 only, |phi| < 1
    double sigma = 1.0;  // innovation scale, > 0
};

/// Synthesizes a ReturnSeries: WhiteNoise is iid N(0, sigma^2); Ar1 follows
/// x_t = phi*x_{t-1} + eps_t after a discarded burn-in of 1000 samples;
/// RandomWalk emits the log returns of p_t = p_{t-1}*exp(eps_t), i.e. the iid
/// innovations themselves. Timestamps land on the given frame's grid starting
/// one bucket after the epoch.
ReturnSeries generate_series(const GeneratorSpec& spec, TimeFrame tf = TimeFrame::D1);

/// Closed-form AR(1) autocorrelation: phi^lag.
double theoretical_acf_ar1(double phi, int lag);

}  // namespace acorr
