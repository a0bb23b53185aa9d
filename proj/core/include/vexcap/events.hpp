#pragma once

#include "vexcap/sampled_path.hpp"

namespace vexcap::game {

bool not_constant(const paths::SampledPath& path);

// { var_p < C and sup |path| > A }; requires p >= 1 and C, A > 0.
bool event_var_below(const paths::SampledPath& path, double p, double C,
                     double A);

// { var_p >= V and sup |path| < A }: the finite-threshold stand-in for
// "infinite p-variation inside the band". Requires p >= 1 and A, V > 0.
bool event_var_large(const paths::SampledPath& path, double p, double A,
                     double V);

}  // namespace vexcap::game
