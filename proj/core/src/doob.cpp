#include "vexcap/doob.hpp"

#include <cmath>
#include <stdexcept>

namespace vexcap::game {

DoobResult doob_strategy(const paths::SampledPath& path, double a, double b,
                         double floor, double stop_at) {
    if (!(floor <= a && a < b))
        throw std::invalid_argument("need floor <= a < b");
    if (stop_at < 0.0 || stop_at > path.horizon())
        throw std::domain_error("stop_at outside [0, T]");

    DoobResult out;
    out.initial_capital = a - floor;
    out.stop_time = stop_at;
    out.strategy.provenance = Provenance::doob;
    out.strategy.params = {
        {"a", a}, {"b", b}, {"floor", floor}, {"stop_at", stop_at}};

    const double floor_tol = 1e-12 * std::max(1.0, std::abs(floor));
    auto check_floor = [&](double v) {
        if (v < floor - floor_tol)
            throw std::runtime_error("path drops below the floor before stop_at");
    };

    bool in_pos = false;
    double v0 = path.values.front();
    double t0 = 0.0;
    check_floor(v0);
    if (v0 <= a) {
        out.strategy.trades.push_back({0.0, 1.0, v0});
        in_pos = true;
    }

    auto process = [&](double t1, double v1) {
        check_floor(v1);
        if (!in_pos) {
            if (v1 <= a && v0 > a) {
                double t = t0 + (a - v0) / (v1 - v0) * (t1 - t0);
                out.strategy.trades.push_back({t, 1.0, a});
                in_pos = true;
                // a monotone falling segment cannot also reach b
            }
        } else if (v1 >= b) {
            // in position implies every value since entry was < b
            double t = t0 + (b - v0) / (v1 - v0) * (t1 - t0);
            out.strategy.trades.push_back({t, 0.0, b});
            in_pos = false;
            ++out.completed_upcrossings;
        }
        t0 = t1;
        v0 = v1;
    };

    for (std::size_t i = 1;
         i < path.times.size() && path.times[i] <= stop_at; ++i)
        process(path.times[i], path.values[i]);
    if (t0 < stop_at) process(stop_at, paths::evaluate(path, stop_at));

    if (in_pos)  // freeze: flat from stop_at on
        out.strategy.trades.push_back({stop_at, 0.0, std::nullopt});
    return out;
}

}  // namespace vexcap::game
