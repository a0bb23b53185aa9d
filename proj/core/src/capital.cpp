#include "vexcap/capital.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vexcap::game {

namespace {

void check_trades(const paths::SampledPath& path,
                  const ElementaryStrategy& strategy) {
    double prev = 0.0;
    for (const auto& tr : strategy.trades) {
        if (tr.time < prev)
            throw std::invalid_argument("trade times must be nondecreasing");
        if (tr.time < 0.0 || tr.time > path.horizon())
            throw std::invalid_argument("trade time outside [0, T]");
        if (!std::isfinite(tr.portfolio))
            throw std::invalid_argument("portfolio must be finite");
        prev = tr.time;
    }
}

// Walks the merged (sample, trade) time axis in order, reporting the capital
// at each recorded time.
template <typename Visit>
void walk_capital(const paths::SampledPath& path,
                  const ElementaryStrategy& strategy, double c, Visit visit) {
    double realized = c;   // capital realized at the last rebalance
    double h = 0.0;        // current portfolio
    double base = 0.0;     // execution price of the current position
    std::size_t next_trade = 0;
    std::size_t i = 0;  // next sample index

    // interpolate at t knowing times[i-1] < t <= times[i]
    auto local_value = [&](double t) {
        if (i < path.times.size() && path.times[i] == t) return path.values[i];
        double t0 = path.times[i - 1], t1 = path.times[i];
        double x0 = path.values[i - 1], x1 = path.values[i];
        return x0 + (t - t0) / (t1 - t0) * (x1 - x0);
    };
    auto rebalance_at = [&](double t) {
        while (next_trade < strategy.trades.size() &&
               strategy.trades[next_trade].time <= t) {
            const auto& tr = strategy.trades[next_trade];
            double px = tr.price ? *tr.price : local_value(tr.time);
            realized += h * (px - base);
            h = tr.portfolio;
            base = px;
            ++next_trade;
        }
    };

    while (i < path.times.size() || next_trade < strategy.trades.size()) {
        double t;
        if (next_trade < strategy.trades.size() &&
            (i >= path.times.size() ||
             strategy.trades[next_trade].time <= path.times[i])) {
            t = strategy.trades[next_trade].time;
        } else {
            t = path.times[i];
        }
        rebalance_at(t);
        double k = realized + h * (local_value(t) - base);
        visit(t, k);
        // consume every sample at exactly t
        while (i < path.times.size() && path.times[i] == t) ++i;
    }
}

}  // namespace

CapitalTrajectory run_elementary(const paths::SampledPath& path,
                                 const ElementaryStrategy& strategy, double c) {
    check_trades(path, strategy);
    CapitalTrajectory out;
    out.initial_capital = c;
    out.min_capital = c;
    walk_capital(path, strategy, c, [&](double t, double k) {
        out.times.push_back(t);
        out.capital.push_back(k);
        out.min_capital = std::min(out.min_capital, k);
    });
    out.terminal_capital = out.capital.back();
    return out;
}

CapitalSummary evaluate_strategy(const paths::SampledPath& path,
                                 const ElementaryStrategy& strategy, double c) {
    check_trades(path, strategy);
    CapitalSummary out;
    out.min_capital = c;
    double last = c;
    walk_capital(path, strategy, c, [&](double, double k) {
        out.min_capital = std::min(out.min_capital, k);
        last = k;
    });
    out.terminal_capital = last;
    return out;
}

}  // namespace vexcap::game
