#pragma once

#include <optional>
#include <vector>

#include "vexcap/sampled_path.hpp"

namespace vexcap::paths {

struct GridCrossing {
    double time;
    double value;  // snapped: exactly level * delta
    long long level;
};

/// Realized stopping times at which the path reaches a new point of the grid
/// delta * Z. Values are snapped to exact grid arithmetic; consecutive values
/// differ by exactly +-delta.
struct GridCrossingSequence {
    double delta = 0.0;
    double origin_value = 0.0;
    long long origin_level = 0;
    std::vector<GridCrossing> entries;
};

// The path's starting value must lie on the grid (tolerance 1e-9 relative);
// it is snapped to exact grid arithmetic. A touch of a grid level by a local
// extremum counts as a crossing. A constant path yields an empty sequence.
GridCrossingSequence grid_crossings(const SampledPath& path, double delta);

enum class HitMode { absolute, upper };

// First time the interpolated path reaches |value| >= A (absolute) or
// value >= A (upper), so 0 when already true at the start; nullopt if never
// reached on [0, T]. Requires A > 0.
std::optional<double> hitting_time(const SampledPath& path, double A,
                                   HitMode mode);

}  // namespace vexcap::paths
