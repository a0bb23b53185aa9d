#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vexcap/generators.hpp"
#include "vexcap/variation.hpp"

using namespace vexcap;
using testutil::path_values;

TEST_CASE("var_p hand fixtures") {
    auto zigzag = path_values({0, 1, 0});
    auto r = analysis::var_p(zigzag, 2.0);
    CHECK(r.value.value() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.maximizing_subdivision == std::vector<std::size_t>{0, 1, 2});

    auto mono = path_values({0, 1});
    for (double p : {1.0, 2.0, 3.5})
        CHECK(analysis::var_p(mono, p).value.value() == doctest::Approx(1.0));

    auto w = path_values({0, 1, 0.5, 1.5});
    CHECK(analysis::var_p(w, 1.0).value.value() == doctest::Approx(2.5));
    CHECK(analysis::var_p(w, 2.0).value.value() == doctest::Approx(2.25));
}

TEST_CASE("var_p for p < 1") {
    auto zigzag = path_values({0, 1, 0});
    CHECK(analysis::var_p(zigzag, 0.5).value.is_infinite());
    auto flat = path_values({2, 2, 2});
    CHECK(analysis::var_p(flat, 0.5).value.value() == 0.0);
    CHECK_THROWS_AS(analysis::var_p(zigzag, 0.0), std::domain_error);
    CHECK_THROWS_AS(analysis::var_p(zigzag, -1.0), std::domain_error);
}

TEST_CASE("brute-force oracle fixtures") {
    CHECK(analysis::var_p_bruteforce(path_values({0, 1, 0}), 2.0) ==
          doctest::Approx(2.0));
    CHECK(analysis::var_p_bruteforce(path_values({0, 1}), 3.0) ==
          doctest::Approx(1.0));
    std::vector<double> big(17, 0.0);
    CHECK_THROWS_AS(analysis::var_p_bruteforce(path_values(big), 2.0),
                    std::invalid_argument);
}

TEST_CASE("DP agrees with the brute-force oracle") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 100; ++rep) {
        auto p = testutil::random_path(rng, 10);
        for (double q : {1.0, 1.3, 2.0, 2.7}) {
            double dp = analysis::var_p(p, q).value.value();
            double bf = analysis::var_p_bruteforce(p, q);
            CHECK(std::abs(dp - bf) <= 1e-9);
        }
    }
}

TEST_CASE("refinement invariance: interpolated points change nothing") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        auto p = testutil::random_path(rng, 12);
        // refine: insert the midpoint of every segment
        std::vector<double> t2, v2;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            t2.push_back(p.times[i]);
            v2.push_back(p.values[i]);
            t2.push_back(0.5 * (p.times[i] + p.times[i + 1]));
            v2.push_back(0.5 * (p.values[i] + p.values[i + 1]));
        }
        t2.push_back(p.times.back());
        v2.push_back(p.values.back());
        auto refined = paths::make_path(t2, v2);
        for (double q : {1.0, 1.5, 2.0, 3.0}) {
            double a = analysis::var_p(p, q).value.value();
            double b = analysis::var_p(refined, q).value.value();
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("var_p is nonincreasing in p when increments are below 1") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        auto p = testutil::random_path(rng, 30);
        for (auto& v : p.values) v *= 0.2;  // range < 1
        double prev = analysis::var_p(p, 1.0).value.value();
        for (double q : {1.3, 1.8, 2.5, 3.5}) {
            double cur = analysis::var_p(p, q).value.value();
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("var_p_prefix") {
    auto p = testutil::path_of({0, 1, 2}, {0, 1, 0});
    CHECK(analysis::var_p_prefix(p, 1.0, 2.0) ==
          doctest::Approx(analysis::var_p(p, 1.0).value.value()));
    CHECK(analysis::var_p_prefix(p, 1.0, 0.0) == 0.0);
    CHECK(analysis::var_p_prefix(p, 1.0, 1.5) == doctest::Approx(1.5));
    CHECK_THROWS_AS(analysis::var_p_prefix(p, 1.0, 3.0), std::domain_error);
}

TEST_CASE("vex_estimate: linear, constant, grid validation") {
    paths::DeterministicParams prm;
    auto lin = paths::generate_deterministic(paths::DeterministicKind::linear,
                                             prm, 256, 1.0);
    double est = analysis::vex_estimate(lin, analysis::default_p_grid(), 6);
    CHECK(est <= 1.1);

    prm.level = 1.0;
    auto flat = paths::generate_deterministic(
        paths::DeterministicKind::constant, prm, 256, 1.0);
    CHECK(analysis::vex_estimate(flat, analysis::default_p_grid(), 6) == 0.0);

    CHECK_THROWS_AS(analysis::vex_estimate(lin, analysis::default_p_grid(), 20),
                    std::invalid_argument);
    CHECK_THROWS_AS(analysis::vex_estimate(lin, {2.0, 1.0}, 4),
                    std::invalid_argument);
}

TEST_CASE("vex_estimate on a single rough path lands near 1/H") {
    auto fbm = paths::generate_fbm(std::size_t{1} << 13, 1.0, 0.4, 77);
    double est = analysis::vex_estimate(fbm, analysis::default_p_grid(), 10);
    CHECK(est > 1.6);   // 1/H = 2.5
    CHECK(est < 3.4);
}
