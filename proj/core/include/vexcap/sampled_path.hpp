#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace vexcap::paths {

/// A continuous function on [0, T] given by sampled points; the path IS the
/// piecewise-linear interpolant between consecutive samples, not the samples.
struct SampledPath {
    std::vector<double> times;   // strictly increasing, times.front() == 0
    std::vector<double> values;  // same length, all finite

    std::string generator = "unknown";
    std::uint64_t seed = 0;
    nlohmann::json params = nlohmann::json::object();
    double origin_offset = 0.0;  // value subtracted by normalized()

    double horizon() const { return times.back(); }
    std::size_t size() const { return times.size(); }
};

// Validates the invariants (length >= 2, strictly increasing times starting
// at 0, finite values) and returns the path. Throws std::invalid_argument.
SampledPath make_path(std::vector<double> times, std::vector<double> values);

// Piecewise-linear interpolation, exact at sample times.
// Throws std::domain_error for t outside [0, T].
double evaluate(const SampledPath& path, double t);

// Shifts the path so it starts at 0; the original offset is kept in
// origin_offset metadata.
SampledPath normalized(const SampledPath& path);

// Prefix of the path on [0, t] with evaluate(path, t) appended as final point.
SampledPath truncated(const SampledPath& path, double t);

double min_value(const SampledPath& path);
double max_value(const SampledPath& path);

// sup_{s in [0, t]} |path(s) - path(0)|
double sup_abs_deviation(const SampledPath& path, double t);

// sup_{s in [0, T]} |path(s)|
double sup_abs(const SampledPath& path);

bool is_constant(const SampledPath& path);

}  // namespace vexcap::paths
