#pragma once

#include "vexcap/capital.hpp"

namespace vexcap::game {

struct DoobResult {
    ElementaryStrategy strategy;
    double initial_capital = 0.0;  // a - floor
    long long completed_upcrossings = 0;
    double stop_time = 0.0;
};

// Upcrossing-harvesting strategy applied to the price path itself: portfolio
// 1 from each time the path descends to <= a until it next reaches >= b,
// then 0; all trading frozen after stop_at. Starts from a - floor and stays
// positive whenever the path stays >= floor up to stop_at; its capital
// dominates (b - a) times the running upcrossing count of (a, b).
// Requires floor <= a < b. Throws if the path drops below floor before
// stop_at (set stop_at to the floor's exit time first).
DoobResult doob_strategy(const paths::SampledPath& path, double a, double b,
                         double floor, double stop_at);

}  // namespace vexcap::game
