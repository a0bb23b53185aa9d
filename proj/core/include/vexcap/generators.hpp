#pragma once

#include <cstdint>
#include <random>

#include "vexcap/sampled_path.hpp"

namespace vexcap::paths {

/// Portable seeded Gaussian source: mt19937_64 uniforms through an explicit
/// Box-Muller transform, so streams are identical across standard libraries.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double uniform();  // in (0, 1]
    double next();     // standard normal

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Cumulative sum of i.i.d. Gaussian increments with variance
// scale^2 * (T / n_steps); n_steps + 1 equally spaced samples, value 0 at 0.
SampledPath generate_brownian(std::size_t n_steps, double T, double scale,
                              std::uint64_t seed);

// Hard cap on generate_fbm's n_steps (exact-covariance method).
inline constexpr std::size_t kFbmMaxSteps = std::size_t{1} << 16;

// Exact-covariance fractional Brownian motion via circulant embedding of the
// fractional Gaussian noise covariance (Davies-Harte). Increment variance
// (T / n_steps)^(2 * hurst); value 0 at 0; deterministic given seed.
SampledPath generate_fbm(std::size_t n_steps, double T, double hurst,
                         std::uint64_t seed);

enum class DeterministicKind { constant, linear, sine, sawtooth, weierstrass };

struct DeterministicParams {
    double level = 0.0;      // constant
    double slope = 1.0;      // linear
    double amplitude = 1.0;  // sine / sawtooth / weierstrass
    double cycles = 1.0;     // sine periods or sawtooth teeth over [0, T]
    double decay = 0.5;      // weierstrass amplitude ratio a in (0, 1)
    double lacunarity = 7.0; // weierstrass frequency ratio b, with a*b >= 1
    int terms = 16;          // weierstrass series truncation
};

SampledPath generate_deterministic(DeterministicKind kind,
                                   const DeterministicParams& params,
                                   std::size_t n_steps, double T);

DeterministicKind deterministic_kind_from_string(const std::string& s);

}  // namespace vexcap::paths
