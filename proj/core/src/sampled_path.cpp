#include "vexcap/sampled_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vexcap::paths {

SampledPath make_path(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size())
        throw std::invalid_argument("times and values must have equal length");
    if (times.size() < 2)
        throw std::invalid_argument("a path needs at least two samples");
    if (times.front() != 0.0)
        throw std::invalid_argument("times must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("times must be strictly increasing");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("values must be finite");
    if (!(times.back() > 0.0))
        throw std::invalid_argument("horizon must be positive");

    SampledPath p;
    p.times = std::move(times);
    p.values = std::move(values);
    return p;
}

double evaluate(const SampledPath& path, double t) {
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("evaluate: t outside [0, T]");
    // first sample time >= t
    auto it = std::lower_bound(path.times.begin(), path.times.end(), t);
    std::size_t i = static_cast<std::size_t>(it - path.times.begin());
    if (i < path.times.size() && path.times[i] == t) return path.values[i];
    // t is strictly inside segment (i-1, i)
    double t0 = path.times[i - 1], t1 = path.times[i];
    double x0 = path.values[i - 1], x1 = path.values[i];
    double w = (t - t0) / (t1 - t0);
    return x0 + w * (x1 - x0);
}

SampledPath normalized(const SampledPath& path) {
    SampledPath out = path;
    double off = path.values.front();
    if (off != 0.0) {
        for (double& v : out.values) v -= off;
        out.values.front() = 0.0;
        out.origin_offset = path.origin_offset + off;
    }
    return out;
}

SampledPath truncated(const SampledPath& path, double t) {
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("truncated: t outside [0, T]");
    if (t == path.horizon()) return path;
    SampledPath out = path;
    out.times.clear();
    out.values.clear();
    for (std::size_t i = 0; i < path.times.size() && path.times[i] < t; ++i) {
        out.times.push_back(path.times[i]);
        out.values.push_back(path.values[i]);
    }
    out.times.push_back(t);
    out.values.push_back(evaluate(path, t));
    if (out.times.size() < 2) {
        // t == 0: degenerate prefix, keep a single flat stub of length epsilon
        throw std::domain_error("truncated: t must be positive");
    }
    return out;
}

double min_value(const SampledPath& path) {
    return *std::min_element(path.values.begin(), path.values.end());
}

double max_value(const SampledPath& path) {
    return *std::max_element(path.values.begin(), path.values.end());
}

double sup_abs_deviation(const SampledPath& path, double t) {
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("sup_abs_deviation: t outside [0, T]");
    double f0 = path.values.front();
    double m = 0.0;
    for (std::size_t i = 0; i < path.times.size() && path.times[i] <= t; ++i)
        m = std::max(m, std::abs(path.values[i] - f0));
    if (t < path.horizon()) m = std::max(m, std::abs(evaluate(path, t) - f0));
    return m;
}

double sup_abs(const SampledPath& path) {
    double m = 0.0;
    for (double v : path.values) m = std::max(m, std::abs(v));
    return m;
}

bool is_constant(const SampledPath& path) {
    for (double v : path.values)
        if (v != path.values.front()) return false;
    return true;
}

}  // namespace vexcap::paths
