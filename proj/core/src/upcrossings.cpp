#include "vexcap/upcrossings.hpp"

#include <cmath>
#include <stdexcept>

namespace vexcap::analysis {

namespace {

// The interpolant's extrema sit at sample points, so scanning sample values
// up to t (plus the cut value at t) is exact.
template <typename Visit>
void scan_values(const paths::SampledPath& path, double t, Visit visit) {
    for (std::size_t i = 0; i < path.times.size() && path.times[i] <= t; ++i)
        visit(path.values[i]);
    if (t < path.horizon()) visit(paths::evaluate(path, t));
}

}  // namespace

long long count_upcrossings(const paths::SampledPath& path, double a, double b,
                            double t, TouchConvention conv) {
    if (!(a < b)) throw std::domain_error("need a < b");
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("t outside [0, T]");

    const bool closed = conv == TouchConvention::closed;
    long long count = 0;
    bool armed = false;
    scan_values(path, t, [&](double v) {
        if (!armed) {
            if (closed ? (v <= a) : (v < a)) armed = true;
        } else if (closed ? (v >= b) : (v > b)) {
            ++count;
            armed = false;
            // the same sample cannot also re-arm: v >= b > a
        }
    });
    return count;
}

long long grid_upcrossing_sum(const paths::SampledPath& path, double delta,
                              double t, TouchConvention conv) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("t outside [0, T]");

    double lo = path.values.front(), hi = lo;
    scan_values(path, t, [&](double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    });

    long long k_lo = static_cast<long long>(std::floor(lo / delta)) - 1;
    long long k_hi = static_cast<long long>(std::ceil(hi / delta)) + 1;

    const bool closed = conv == TouchConvention::closed;
    // one pass, all intervals tracked at once
    std::vector<char> armed(static_cast<std::size_t>(k_hi - k_lo + 1), 0);
    long long total = 0;
    scan_values(path, t, [&](double v) {
        for (long long k = k_lo; k <= k_hi; ++k) {
            double a = static_cast<double>(k) * delta;
            double b = a + delta;
            auto& st = armed[static_cast<std::size_t>(k - k_lo)];
            if (!st) {
                if (closed ? (v <= a) : (v < a)) st = 1;
            } else if (closed ? (v >= b) : (v > b)) {
                ++total;
                st = 0;
            }
        }
    });
    return total;
}

}  // namespace vexcap::analysis
