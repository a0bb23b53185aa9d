#include <doctest.h>

#include "test_util.hpp"
#include "vexcap/capital.hpp"
#include "vexcap/doob.hpp"
#include "vexcap/generators.hpp"
#include "vexcap/grid.hpp"
#include "vexcap/upcrossings.hpp"

using namespace vexcap;
using testutil::path_of;

TEST_CASE("doob on a square wave harvests both upcrossings") {
    auto sq = path_of({0, 1, 2, 3, 4}, {0, 1, 0, 1, 0});
    auto d = game::doob_strategy(sq, 0.0, 1.0, -1.0, 4.0);
    CHECK(d.initial_capital == doctest::Approx(1.0));
    CHECK(d.completed_upcrossings == 2);
    auto traj = game::run_elementary(sq, d.strategy, d.initial_capital);
    CHECK(traj.terminal_capital >= 2.0);
    CHECK(traj.min_capital >= -1e-12);
}

TEST_CASE("doob above a never trades") {
    auto p = path_of({0, 1, 2}, {1, 2, 1.5});
    auto d = game::doob_strategy(p, 0.5, 2.5, 0.0, 2.0);
    CHECK(d.strategy.trades.empty());
    auto traj = game::run_elementary(p, d.strategy, d.initial_capital);
    for (double k : traj.capital) CHECK(k == doctest::Approx(0.5));
}

TEST_CASE("doob on a monotone ramp") {
    auto ramp = path_of({0, 1}, {0, 1});
    auto d = game::doob_strategy(ramp, 0.0, 1.0, -1.0, 1.0);
    CHECK(d.completed_upcrossings == 1);
    auto traj = game::run_elementary(ramp, d.strategy, d.initial_capital);
    CHECK(traj.terminal_capital == doctest::Approx(2.0));
}

TEST_CASE("doob refuses a path that violates the floor") {
    auto p = path_of({0, 1, 2}, {0, -2, 0});
    CHECK_THROWS_AS(game::doob_strategy(p, 0.5, 1.0, -1.0, 2.0),
                    std::runtime_error);
    // stopping before the violation is fine
    CHECK_NOTHROW(game::doob_strategy(p, 0.5, 1.0, -1.0, 0.4));
    CHECK_THROWS_AS(game::doob_strategy(p, 1.0, 0.5, -1.0, 1.0),
                    std::invalid_argument);  // a >= b
}

TEST_CASE("doob dominates the running upcrossing count") {
    for (int s = 0; s < 20; ++s) {
        auto w = paths::generate_brownian(1024, 1.0, 1.0,
                                          1300 + static_cast<std::uint64_t>(s));
        double a = -0.2, b = 0.25, floor = -3.0;
        auto exit =
            paths::hitting_time(w, -floor, paths::HitMode::absolute);
        double stop = exit ? *exit : w.horizon();
        auto d = game::doob_strategy(w, a, b, floor, stop);
        auto traj = game::run_elementary(w, d.strategy, d.initial_capital);
        CHECK(traj.min_capital >= -1e-9);
        CHECK(d.completed_upcrossings ==
              analysis::count_upcrossings(w, a, b, stop));
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            if (traj.times[i] > stop) break;
            long long m = analysis::count_upcrossings(w, a, b, traj.times[i]);
            CHECK(traj.capital[i] >=
                  (b - a) * static_cast<double>(m) - 1e-9);
        }
    }
}

TEST_CASE("doob non-anticipation under truncation") {
    auto w = paths::generate_brownian(512, 1.0, 1.0, 1401);
    auto full = game::doob_strategy(w, -0.1, 0.2, -5.0, w.horizon());
    for (double t : {0.2, 0.4, 0.6, 0.8}) {
        auto wt = paths::truncated(w, t);
        auto part = game::doob_strategy(wt, -0.1, 0.2, -5.0, wt.horizon());
        std::size_t n = 0;
        while (n < full.strategy.trades.size() &&
               full.strategy.trades[n].time < t)
            ++n;
        REQUIRE(part.strategy.trades.size() >= n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(part.strategy.trades[i].time == full.strategy.trades[i].time);
            CHECK(part.strategy.trades[i].portfolio ==
                  full.strategy.trades[i].portfolio);
        }
    }
}
