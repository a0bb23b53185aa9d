#pragma once

#include <vector>

#include "vexcap/extended_real.hpp"
#include "vexcap/sampled_path.hpp"

namespace vexcap::analysis {

struct VariationReport {
    double p = 0.0;
    ExtReal value = ExtReal::finite(0.0);
    // sample indices of a maximizing subdivision (start 0, end last) when the
    // value is finite
    std::vector<std::size_t> maximizing_subdivision;
};

// Strong p-variation of the piecewise-linear interpolant.
//   p >= 1: exact supremum, dynamic programming over local extrema (for
//           p >= 1 the supremum is attained on sample points).
//   p < 1:  +infinity for non-constant paths (refining any linear segment
//           diverges), 0 for constant paths.
// Throws std::domain_error for p <= 0.
VariationReport var_p(const paths::SampledPath& path, double p);

// Exhaustive maximum over all 2^(n-2) subsets of interior sample points.
// Requires p >= 1 and at most 16 samples.
double var_p_bruteforce(const paths::SampledPath& path, double p);

// var_p of the path restricted to [0, t] (with the interpolated value at t
// appended). Requires p >= 1 and t in [0, T].
double var_p_prefix(const paths::SampledPath& path, double p, double t);

// Variation-exponent estimate from dyadic-mesh variation sums: for each p in
// the increasing grid, V_p^(m) = sum_j |w(j T 2^-m) - w((j-1) T 2^-m)|^p for
// m = 1..levels; p counts as "growing" when the mean level-to-level ratio
// over the top three levels is >= 1.05. The estimate interpolates the grid
// point where growth stops. Constant paths give 0.
double vex_estimate(const paths::SampledPath& path,
                    const std::vector<double>& p_grid, int levels);

std::vector<double> default_p_grid();

}  // namespace vexcap::analysis
