#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vexcap/sampled_path.hpp"

namespace vexcap::game {

struct Trade {
    double time = 0.0;
    double portfolio = 0.0;
    // execution price override (snapped grid value); the interpolated path
    // value at `time` is used when absent
    std::optional<double> price;
};

enum class Provenance { strategy_a, doob, custom };

/// A realized trading strategy on one path: at each stop time the portfolio
/// is rebalanced; the last portfolio is held to T. Constructors only ever see
/// the path prefix up to each stop time.
struct ElementaryStrategy {
    std::vector<Trade> trades;  // nondecreasing times within [0, T]
    Provenance provenance = Provenance::custom;
    nlohmann::json params = nlohmann::json::object();
};

struct CapitalTrajectory {
    double initial_capital = 0.0;
    std::vector<double> times;    // path sample times merged with trade times
    std::vector<double> capital;  // affine in the price between trades
    double min_capital = 0.0;
    double terminal_capital = 0.0;
};

// Exact telescoping evaluation of the elementary capital process
// c + sum_n h_n (price(next stop) - price(stop)), recorded at every path
// sample time and every trade time. Throws on decreasing trade times.
CapitalTrajectory run_elementary(const paths::SampledPath& path,
                                 const ElementaryStrategy& strategy, double c);

struct CapitalSummary {
    double min_capital = 0.0;
    double terminal_capital = 0.0;
};

// Same evaluation without materializing the trajectory (for large ensembles).
CapitalSummary evaluate_strategy(const paths::SampledPath& path,
                                 const ElementaryStrategy& strategy, double c);

}  // namespace vexcap::game
