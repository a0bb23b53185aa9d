#include "vexcap/generators.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace vexcap::paths {

double GaussianSource::uniform() {
    // (0, 1]: never returns 0, so log() below is safe
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSource::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

namespace {

std::vector<double> uniform_times(std::size_t n_steps, double T) {
    std::vector<double> times(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i)
        times[i] = T * static_cast<double>(i) / static_cast<double>(n_steps);
    times.front() = 0.0;
    times.back() = T;
    return times;
}

// In-place iterative radix-2 FFT; sign = -1 forward, +1 inverse (unscaled).
void fft(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                auto u = a[i + j];
                auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

SampledPath generate_brownian(std::size_t n_steps, double T, double scale,
                              std::uint64_t seed) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");

    GaussianSource g(seed);
    double sd = scale * std::sqrt(T / static_cast<double>(n_steps));
    std::vector<double> values(n_steps + 1, 0.0);
    for (std::size_t i = 1; i <= n_steps; ++i)
        values[i] = values[i - 1] + sd * g.next();

    SampledPath p = make_path(uniform_times(n_steps, T), std::move(values));
    p.generator = "brownian";
    p.seed = seed;
    p.params = {{"n_steps", n_steps}, {"T", T}, {"scale", scale}};
    return p;
}

SampledPath generate_fbm(std::size_t n_steps, double T, double hurst,
                         std::uint64_t seed) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("hurst must lie in (0, 1)");
    if (n_steps > kFbmMaxSteps)
        throw std::invalid_argument("n_steps exceeds the exact-method cap");

    const std::size_t n = n_steps;
    // fractional Gaussian noise autocovariance at unit increment variance
    auto gamma = [hurst](std::size_t k) {
        double kd = static_cast<double>(k);
        return 0.5 * (std::pow(kd + 1.0, 2.0 * hurst) -
                      2.0 * std::pow(kd, 2.0 * hurst) +
                      std::pow(std::abs(kd - 1.0), 2.0 * hurst));
    };

    std::size_t m = 1;
    while (m < 2 * n) m <<= 1;

    std::vector<std::complex<double>> row(m);
    for (std::size_t j = 0; j <= m / 2; ++j) row[j] = gamma(j);
    for (std::size_t j = m / 2 + 1; j < m; ++j) row[j] = gamma(m - j);
    fft(row, -1);

    double max_eig = 0.0;
    for (auto& e : row) max_eig = std::max(max_eig, e.real());
    std::vector<double> eig(m);
    for (std::size_t j = 0; j < m; ++j) {
        double e = row[j].real();
        if (e < -1e-8 * max_eig)
            throw std::runtime_error("circulant embedding not nonnegative definite");
        eig[j] = std::max(e, 0.0);
    }

    GaussianSource g(seed);
    std::vector<std::complex<double>> z(m);
    double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    z[0] = std::sqrt(eig[0]) * g.next() * inv_sqrt_m;
    z[m / 2] = std::sqrt(eig[m / 2]) * g.next() * inv_sqrt_m;
    for (std::size_t j = 1; j < m / 2; ++j) {
        double a = g.next();
        double b = g.next();
        std::complex<double> v = std::sqrt(eig[j] / 2.0) *
                                 std::complex<double>(a, b) * inv_sqrt_m;
        z[j] = v;
        z[m - j] = std::conj(v);
    }
    fft(z, -1);

    double sd = std::pow(T / static_cast<double>(n), hurst);
    std::vector<double> values(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i)
        values[i] = values[i - 1] + sd * z[i - 1].real();

    SampledPath p = make_path(uniform_times(n, T), std::move(values));
    p.generator = "fbm";
    p.seed = seed;
    p.params = {{"n_steps", n}, {"T", T}, {"hurst", hurst}};
    return p;
}

SampledPath generate_deterministic(DeterministicKind kind,
                                   const DeterministicParams& params,
                                   std::size_t n_steps, double T) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");

    auto times = uniform_times(n_steps, T);
    std::vector<double> values(n_steps + 1);
    const char* name = "constant";

    switch (kind) {
        case DeterministicKind::constant:
            for (auto& v : values) v = params.level;
            name = "constant";
            break;
        case DeterministicKind::linear:
            for (std::size_t i = 0; i <= n_steps; ++i)
                values[i] = params.slope * times[i];
            name = "linear";
            break;
        case DeterministicKind::sine:
            for (std::size_t i = 0; i <= n_steps; ++i)
                values[i] = params.amplitude *
                            std::sin(2.0 * std::numbers::pi * params.cycles *
                                     times[i] / T);
            name = "sine";
            break;
        case DeterministicKind::sawtooth:
            // triangle wave: `cycles` full teeth, each rising to `amplitude`
            // and back to 0
            for (std::size_t i = 0; i <= n_steps; ++i) {
                double u = params.cycles * times[i] / T;
                u -= std::floor(u);
                if (i == n_steps) u = (u == 0.0) ? 1.0 : u;
                double tri = (u <= 0.5) ? 2.0 * u : 2.0 * (1.0 - u);
                values[i] = params.amplitude * tri;
            }
            name = "sawtooth";
            break;
        case DeterministicKind::weierstrass: {
            if (!(params.decay > 0.0 && params.decay < 1.0))
                throw std::invalid_argument("weierstrass decay must be in (0, 1)");
            for (std::size_t i = 0; i <= n_steps; ++i) {
                double s = 0.0, a = 1.0, b = 1.0;
                for (int k = 0; k < params.terms; ++k) {
                    s += a * std::cos(std::numbers::pi * b * params.cycles *
                                      times[i] / T);
                    a *= params.decay;
                    b *= params.lacunarity;
                }
                values[i] = params.amplitude * s;
            }
            name = "weierstrass";
            break;
        }
        default:
            throw std::invalid_argument("unknown deterministic kind");
    }

    SampledPath p = make_path(std::move(times), std::move(values));
    p.generator = name;
    p.params = {{"n_steps", n_steps}, {"T", T}};
    return p;
}

DeterministicKind deterministic_kind_from_string(const std::string& s) {
    if (s == "constant") return DeterministicKind::constant;
    if (s == "linear") return DeterministicKind::linear;
    if (s == "sine") return DeterministicKind::sine;
    if (s == "sawtooth") return DeterministicKind::sawtooth;
    if (s == "weierstrass") return DeterministicKind::weierstrass;
    throw std::invalid_argument("unknown deterministic kind: " + s);
}

}  // namespace vexcap::paths
