#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vexcap/capital.hpp"

using namespace vexcap;
using testutil::path_of;

TEST_CASE("buy and hold on a linear ramp") {
    auto ramp = path_of({0, 1}, {0, 1});
    game::ElementaryStrategy s;
    s.trades = {{0.0, 1.0, std::nullopt}};
    auto traj = game::run_elementary(ramp, s, 0.0);
    CHECK(traj.terminal_capital == doctest::Approx(1.0));
    CHECK(traj.min_capital == doctest::Approx(0.0));
}

TEST_CASE("no trades means constant capital") {
    auto ramp = path_of({0, 1}, {0, 1});
    game::ElementaryStrategy s;
    auto traj = game::run_elementary(ramp, s, 2.5);
    for (double k : traj.capital) CHECK(k == 2.5);
    CHECK(traj.terminal_capital == 2.5);
}

TEST_CASE("two-leg rebalance telescopes by hand") {
    auto ramp = path_of({0, 1}, {0, 1});
    game::ElementaryStrategy s;
    s.trades = {{0.25, 2.0, std::nullopt}, {0.5, -1.0, std::nullopt}};
    auto traj = game::run_elementary(ramp, s, 0.0);
    // 2 * 0.25 + (-1) * 0.5 = 0
    CHECK(traj.terminal_capital == doctest::Approx(0.0));
}

TEST_CASE("malformed trades are rejected") {
    auto ramp = path_of({0, 1}, {0, 1});
    game::ElementaryStrategy s;
    s.trades = {{0.5, 1.0, std::nullopt}, {0.25, 0.0, std::nullopt}};
    CHECK_THROWS_AS(game::run_elementary(ramp, s, 0.0), std::invalid_argument);
    game::ElementaryStrategy t;
    t.trades = {{1.5, 1.0, std::nullopt}};
    CHECK_THROWS_AS(game::run_elementary(ramp, t, 0.0), std::invalid_argument);
}

TEST_CASE("price overrides drive the telescoping sum") {
    auto p = path_of({0, 1, 2}, {0, 0.99, 2.02});
    game::ElementaryStrategy s;
    s.trades = {{1.0, 1.0, 1.0}, {2.0, 0.0, 2.0}};
    auto traj = game::run_elementary(p, s, 0.0);
    CHECK(traj.terminal_capital == doctest::Approx(1.0));  // snapped 2 - 1
}

TEST_CASE("telescoping exactness on random strategies") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> uh(-3.0, 3.0);
    for (int rep = 0; rep < 30; ++rep) {
        auto p = testutil::random_path(rng, 25);
        game::ElementaryStrategy s;
        double t = 0.0;
        std::uniform_real_distribution<double> ut(0.3, 3.0);
        std::vector<double> hs, pxs;
        while ((t += ut(rng)) < p.horizon()) {
            double h = uh(rng);
            s.trades.push_back({t, h, std::nullopt});
            hs.push_back(h);
            pxs.push_back(paths::evaluate(p, t));
        }
        if (s.trades.empty()) continue;
        auto traj = game::run_elementary(p, s, 1.0);
        double expect = 1.0;
        for (std::size_t n = 0; n < hs.size(); ++n) {
            double next = (n + 1 < hs.size()) ? pxs[n + 1] : p.values.back();
            expect += hs[n] * (next - pxs[n]);
        }
        CHECK(traj.terminal_capital == doctest::Approx(expect).epsilon(1e-12));

        auto summary = game::evaluate_strategy(p, s, 1.0);
        CHECK(summary.terminal_capital == traj.terminal_capital);
        CHECK(summary.min_capital == traj.min_capital);
    }
}

TEST_CASE("trajectory records every sample and trade time") {
    auto p = path_of({0, 1, 2}, {0, 1, 0});
    game::ElementaryStrategy s;
    s.trades = {{0.5, 1.0, std::nullopt}, {1.5, 0.0, std::nullopt}};
    auto traj = game::run_elementary(p, s, 0.0);
    std::vector<double> expect{0, 0.5, 1, 1.5, 2};
    CHECK(traj.times == expect);
}
