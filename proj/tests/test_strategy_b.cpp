#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "vexcap/bruneau.hpp"
#include "vexcap/generators.hpp"
#include "vexcap/strategy_b.hpp"

using namespace vexcap;
using testutil::path_of;

TEST_CASE("strategy B initial-capital accounting") {
    auto w = paths::generate_brownian(256, 1.0, 1.0, 1501);
    auto res = game::strategy_b(w, 3.0, 1.0, 4);
    // sum_k 2^-kq (2^(2k+1) - 2^k), the exact per-level sum
    double expect = 0.0;
    for (int k = 1; k <= 4; ++k)
        expect += std::pow(2.0, -3.0 * k) *
                  (std::pow(2.0, 2 * k + 1) - std::pow(2.0, k));
    CHECK(res.ensemble.initial_capital == doctest::Approx(expect));
    CHECK(res.initial_capital_bound == doctest::Approx(2.0));
    CHECK(res.ensemble.initial_capital <= res.initial_capital_bound);

    // level k=1 at q=3: components i=-1..2 start from (i+1) A/2 each,
    // weighted sum 6 * 2^-3 = 0.75 <= 2^-3 * 2^3 = 1
    double level1 = 0.0;
    for (const auto& c : res.ensemble.components)
        if (c.k == 1) level1 += c.weight * c.initial_capital;
    CHECK(level1 == doctest::Approx(0.75));
    CHECK(level1 <= 1.0);
}

TEST_CASE("strategy B rejects q <= 2") {
    auto w = paths::generate_brownian(64, 1.0, 1.0, 1502);
    CHECK_THROWS_AS(game::strategy_b(w, 2.0, 1.0, 2), std::domain_error);
    CHECK_THROWS_AS(game::strategy_b(w, 1.5, 1.0, 2), std::domain_error);
}

TEST_CASE("strategy B on a constant path keeps the initial capital") {
    auto flat = path_of({0, 1}, {0, 0});
    auto res = game::strategy_b(flat, 3.0, 1.0, 3);
    CHECK(res.terminal_capital ==
          doctest::Approx(res.ensemble.initial_capital));
    CHECK(res.truncated_bruneau == 0.0);
}

TEST_CASE("strategy B components are positive and pay the Bruneau constant") {
    for (int s = 0; s < 5; ++s) {
        auto w = paths::generate_brownian(std::size_t{1} << 11, 1.0, 1.0,
                                          1600 + static_cast<std::uint64_t>(s));
        double q = 2.5, A = 2.0;
        int K = 6;
        auto res = game::strategy_b(w, q, A, K);

        for (const auto& c : res.ensemble.components) {
            CHECK(c.min_capital >= -1e-9);
            CHECK(c.initial_capital >= 0.0);
        }
        CHECK(res.min_capital >= -1e-9);
        CHECK(res.terminal_capital >= res.truncated_bruneau - 1e-9);

        // per-level counts agree exactly with the analysis-side sums
        auto stopped = (res.stop_time < w.horizon())
                           ? paths::truncated(w, res.stop_time)
                           : w;
        auto bru = analysis::bruneau_constant(stopped, q, A, stopped.horizon(),
                                              K);
        REQUIRE(bru.per_level.size() == res.per_level.size());
        for (std::size_t k = 0; k < res.per_level.size(); ++k) {
            CHECK(res.per_level[k].upcrossings ==
                  bru.per_level[k].upcrossings);
            CHECK(std::abs(res.per_level[k].weighted -
                           bru.per_level[k].weighted) <= 1e-9);
        }
        CHECK(std::abs(res.truncated_bruneau - bru.constant) <= 1e-9);
    }
}

TEST_CASE("strategy B tail bound matches the geometric series") {
    auto w = paths::generate_brownian(128, 1.0, 1.0, 1701);
    double q = 3.0;
    for (int K : {2, 4, 6}) {
        auto res = game::strategy_b(w, q, 1.0, K);
        double tail = 0.0;
        for (int k = K + 1; k <= K + 200; ++k)
            tail += std::pow(2.0, -q * k) * std::pow(2.0, 2 * k + 1);
        CHECK(res.ensemble.tail_bound == doctest::Approx(tail));
        CHECK(res.ensemble.initial_capital + res.ensemble.tail_bound <=
              res.initial_capital_bound + 1e-12);
    }
}

TEST_CASE("strategy B non-anticipation under truncation") {
    auto w = paths::generate_brownian(512, 1.0, 1.0, 1801);
    auto full = game::strategy_b(w, 2.5, 2.0, 3);
    for (double t : {0.3, 0.7}) {
        auto part = game::strategy_b(paths::truncated(w, t), 2.5, 2.0, 3);
        REQUIRE(part.ensemble.components.size() ==
                full.ensemble.components.size());
        for (std::size_t ci = 0; ci < full.ensemble.components.size(); ++ci) {
            const auto& ft = full.ensemble.components[ci].strategy.trades;
            const auto& pt = part.ensemble.components[ci].strategy.trades;
            std::size_t n = 0;
            while (n < ft.size() && ft[n].time < t) ++n;
            REQUIRE(pt.size() >= n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(pt[i].time == ft[i].time);
                CHECK(pt[i].portfolio == ft[i].portfolio);
            }
        }
    }
}
