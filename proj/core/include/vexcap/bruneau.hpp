#pragma once

#include <vector>

#include "vexcap/sampled_path.hpp"
#include "vexcap/upcrossings.hpp"

namespace vexcap::analysis {

struct BruneauLevel {
    int k = 0;
    double mesh = 0.0;          // lambda * 2^-k
    long long upcrossings = 0;  // M_t(f, mesh)
    double weighted = 0.0;      // 2^-kq * M
};

struct BruneauReport {
    double q = 0.0;
    double lambda = 0.0;
    double t = 0.0;
    int k_max = 0;
    std::vector<BruneauLevel> per_level;
    double constant = 0.0;  // max over per_level of weighted
    // true when the sup is attained at k = k_max, i.e. the truncation may bind
    bool saturated = false;
};

// Truncated sup_{1<=k<=k_max} 2^-kq M_t(f, lambda 2^-k).
// Requires q >= 1, lambda > 0, k_max >= 1.
BruneauReport bruneau_constant(const paths::SampledPath& path, double q,
                               double lambda, double t, int k_max);

// Truncation depth below which mesh levels drop under the path's own sample
// resolution (median absolute increment).
int default_k_max(const paths::SampledPath& path, double lambda);

struct BruneauBoundCheck {
    double lhs = 0.0;  // var_p(f, [0,t])
    double rhs = 0.0;  // (2^(p+q+1) / (1 - 2^(q-p))) (2 c + 1) lambda^p
    bool holds = false;
    double lambda = 0.0;
    BruneauReport levels;
};

// Checks the universal p-variation bound with lambda = sup_{s<=t} |f(s)-f(0)|
// (its smallest admissible value). Requires 1 <= q < p. A path constant on
// [0, t] degenerates to (0, 0, true).
BruneauBoundCheck bruneau_bound_check(const paths::SampledPath& path, double p,
                                      double q, double t, int k_max);

}  // namespace vexcap::analysis
