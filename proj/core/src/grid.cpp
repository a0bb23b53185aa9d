#include "vexcap/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace vexcap::paths {

GridCrossingSequence grid_crossings(const SampledPath& path, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");

    double x0 = path.values.front();
    long long origin = std::llround(x0 / delta);
    if (std::abs(x0 - static_cast<double>(origin) * delta) >
        1e-9 * std::max(1.0, std::abs(x0)))
        throw std::invalid_argument("path must start on the grid");

    GridCrossingSequence seq;
    seq.delta = delta;
    seq.origin_level = origin;
    seq.origin_value = static_cast<double>(origin) * delta;

    long long cur = origin;
    for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
        double t0 = path.times[i], t1 = path.times[i + 1];
        double a = path.values[i], b = path.values[i + 1];
        if (a == b) continue;
        if (b > a) {
            for (long long lvl = cur + 1;
                 static_cast<double>(lvl) * delta <= b; ++lvl) {
                double y = static_cast<double>(lvl) * delta;
                double t = (y >= b) ? t1 : t0 + (y - a) / (b - a) * (t1 - t0);
                seq.entries.push_back({t, y, lvl});
                cur = lvl;
            }
        } else {
            for (long long lvl = cur - 1;
                 static_cast<double>(lvl) * delta >= b; --lvl) {
                double y = static_cast<double>(lvl) * delta;
                double t = (y <= b) ? t1 : t0 + (y - a) / (b - a) * (t1 - t0);
                seq.entries.push_back({t, y, lvl});
                cur = lvl;
            }
        }
    }
    return seq;
}

std::optional<double> hitting_time(const SampledPath& path, double A,
                                   HitMode mode) {
    if (!(A > 0.0)) throw std::invalid_argument("level must be positive");

    auto interp = [](double t0, double t1, double a, double b, double y) {
        return t0 + (y - a) / (b - a) * (t1 - t0);
    };

    if (mode == HitMode::upper) {
        if (path.values.front() >= A) return 0.0;
        for (std::size_t i = 0; i + 1 < path.times.size(); ++i)
            if (path.values[i + 1] >= A)  // values[i] < A up to here
                return interp(path.times[i], path.times[i + 1],
                              path.values[i], path.values[i + 1], A);
        return std::nullopt;
    }

    if (std::abs(path.values.front()) >= A) return 0.0;
    for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
        // values[i] is inside (-A, A); a linear segment exits on one side only
        double a = path.values[i], b = path.values[i + 1];
        if (b >= A)
            return interp(path.times[i], path.times[i + 1], a, b, A);
        if (b <= -A)
            return interp(path.times[i], path.times[i + 1], a, b, -A);
    }
    return std::nullopt;
}

}  // namespace vexcap::paths
