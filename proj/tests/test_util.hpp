#pragma once

#include <random>
#include <vector>

#include "vexcap/sampled_path.hpp"

namespace testutil {

inline vexcap::paths::SampledPath path_of(std::vector<double> times,
                                          std::vector<double> values) {
    return vexcap::paths::make_path(std::move(times), std::move(values));
}

// equally spaced samples of the given values on [0, n-1]
inline vexcap::paths::SampledPath path_values(std::vector<double> values) {
    std::vector<double> times(values.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        times[i] = static_cast<double>(i);
    return path_of(std::move(times), std::move(values));
}

// random piecewise-linear path with n samples, values uniform in [-1, 1]
inline vexcap::paths::SampledPath random_path(std::mt19937_64& rng,
                                              std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> values(n);
    for (auto& v : values) v = u(rng);
    return path_values(std::move(values));
}

}  // namespace testutil
