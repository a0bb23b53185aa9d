#pragma once

#include "vexcap/sampled_path.hpp"

namespace vexcap::analysis {

// Whether a touch of the boundary counts: closed arms at f <= a and completes
// at f >= b; strict requires f < a and f > b.
enum class TouchConvention { closed, strict };

// Number of upcrossings of (a, b) on [0, t]: the largest k such that there
// are s_1 < u_1 < ... < s_k < u_k <= t with f(s_i) <= a and f(u_i) >= b.
// Requires a < b and t in [0, T].
long long count_upcrossings(const paths::SampledPath& path, double a, double b,
                            double t,
                            TouchConvention conv = TouchConvention::closed);

// Sum of count_upcrossings over all grid intervals (k delta, (k+1) delta)
// intersecting the path's range.
long long grid_upcrossing_sum(const paths::SampledPath& path, double delta,
                              double t,
                              TouchConvention conv = TouchConvention::closed);

}  // namespace vexcap::analysis
