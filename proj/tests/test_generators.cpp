#include <doctest.h>

#include <cmath>
#include <numeric>

#include "vexcap/generators.hpp"

using namespace vexcap;

namespace {

double lag1_increment_correlation(const paths::SampledPath& p) {
    std::vector<double> inc(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        inc[i - 1] = p.values[i] - p.values[i - 1];
    double mean = std::accumulate(inc.begin(), inc.end(), 0.0) /
                  static_cast<double>(inc.size());
    double var = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < inc.size(); ++i) {
        var += (inc[i] - mean) * (inc[i] - mean);
        if (i + 1 < inc.size()) cov += (inc[i] - mean) * (inc[i + 1] - mean);
    }
    return cov / var;
}

}  // namespace

TEST_CASE("brownian generation is deterministic per seed") {
    auto a = paths::generate_brownian(1000, 1.0, 1.0, 99);
    auto b = paths::generate_brownian(1000, 1.0, 1.0, 99);
    CHECK(a.values == b.values);
    auto c = paths::generate_brownian(1000, 1.0, 1.0, 100);
    CHECK(a.values != c.values);
}

TEST_CASE("brownian rejects bad parameters") {
    CHECK_THROWS_AS(paths::generate_brownian(100, 1.0, 0.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(paths::generate_brownian(0, 1.0, 1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(paths::generate_brownian(100, -1.0, 1.0, 1),
                    std::invalid_argument);
}

TEST_CASE("brownian terminal variance is near scale^2 T") {
    const int n_seeds = 500;
    double s2 = 0.0;
    for (int s = 0; s < n_seeds; ++s) {
        auto p = paths::generate_brownian(std::size_t{1} << 14, 1.0, 1.0,
                                          1000 + static_cast<std::uint64_t>(s));
        s2 += p.values.back() * p.values.back();
    }
    double var = s2 / n_seeds;
    CHECK(var > 0.8);
    CHECK(var < 1.2);
}

TEST_CASE("fbm is deterministic and validates hurst") {
    auto a = paths::generate_fbm(512, 1.0, 0.3, 5);
    auto b = paths::generate_fbm(512, 1.0, 0.3, 5);
    CHECK(a.values == b.values);
    CHECK_THROWS_AS(paths::generate_fbm(512, 1.0, 1.5, 5), std::domain_error);
    CHECK_THROWS_AS(paths::generate_fbm(512, 1.0, 0.0, 5), std::domain_error);
    CHECK_THROWS_AS(paths::generate_fbm((std::size_t{1} << 16) + 1, 1.0, 0.5, 5),
                    std::invalid_argument);
}

TEST_CASE("fbm H=0.5 has uncorrelated increments") {
    double acc = 0.0;
    const int n_seeds = 500;
    for (int s = 0; s < n_seeds; ++s)
        acc += lag1_increment_correlation(paths::generate_fbm(
            1024, 1.0, 0.5, 2000 + static_cast<std::uint64_t>(s)));
    double mean = acc / n_seeds;
    CHECK(mean > -0.05);
    CHECK(mean < 0.05);
}

TEST_CASE("fbm H=0.25 increment correlation matches 2^(2H-1) - 1") {
    double acc = 0.0;
    const int n_seeds = 500;
    for (int s = 0; s < n_seeds; ++s)
        acc += lag1_increment_correlation(paths::generate_fbm(
            1024, 1.0, 0.25, 3000 + static_cast<std::uint64_t>(s)));
    double mean = acc / n_seeds;
    double expected = std::pow(2.0, 2.0 * 0.25 - 1.0) - 1.0;  // -0.2929
    CHECK(mean > expected - 0.05);
    CHECK(mean < expected + 0.05);
}

TEST_CASE("fbm terminal variance is near T^(2H)") {
    for (double H : {0.25, 0.75}) {
        double s2 = 0.0;
        const int n_seeds = 400;
        for (int s = 0; s < n_seeds; ++s) {
            auto p = paths::generate_fbm(256, 1.0, H,
                                         4000 + static_cast<std::uint64_t>(s));
            s2 += p.values.back() * p.values.back();
        }
        double var = s2 / n_seeds;
        CHECK(var > 0.75);
        CHECK(var < 1.25);
    }
}

TEST_CASE("deterministic kinds") {
    paths::DeterministicParams prm;
    prm.level = 3.0;
    auto c = paths::generate_deterministic(paths::DeterministicKind::constant,
                                           prm, 10, 1.0);
    for (double v : c.values) CHECK(v == 3.0);

    prm.slope = 1.0;
    auto l = paths::generate_deterministic(paths::DeterministicKind::linear,
                                           prm, 10, 1.0);
    for (std::size_t i = 0; i < l.size(); ++i)
        CHECK(l.values[i] == doctest::Approx(l.times[i]));

    // two full teeth, amplitude 1: four monotone legs, total variation 4
    prm.amplitude = 1.0;
    prm.cycles = 2.0;
    auto s = paths::generate_deterministic(paths::DeterministicKind::sawtooth,
                                           prm, 400, 1.0);
    double tv = 0.0;
    int legs = 0;
    double dir = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        double d = s.values[i] - s.values[i - 1];
        tv += std::abs(d);
        if (d != 0.0 && (dir == 0.0 || d * dir < 0.0)) {
            ++legs;
            dir = d;
        }
    }
    CHECK(tv == doctest::Approx(4.0));
    CHECK(legs == 4);

    CHECK_THROWS_AS(paths::deterministic_kind_from_string("wiggle"),
                    std::invalid_argument);
}
