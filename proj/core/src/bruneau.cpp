#include "vexcap/bruneau.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vexcap/variation.hpp"

namespace vexcap::analysis {

BruneauReport bruneau_constant(const paths::SampledPath& path, double q,
                               double lambda, double t, int k_max) {
    if (!(q >= 1.0)) throw std::domain_error("q must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("t outside [0, T]");

    BruneauReport rep;
    rep.q = q;
    rep.lambda = lambda;
    rep.t = t;
    rep.k_max = k_max;

    for (int k = 1; k <= k_max; ++k) {
        BruneauLevel lvl;
        lvl.k = k;
        lvl.mesh = lambda * std::pow(2.0, -k);
        lvl.upcrossings = grid_upcrossing_sum(path, lvl.mesh, t);
        lvl.weighted = std::pow(2.0, -k * q) *
                       static_cast<double>(lvl.upcrossings);
        if (lvl.weighted >= rep.constant) {
            rep.constant = lvl.weighted;
            rep.saturated = (k == k_max) && lvl.weighted > 0.0;
        }
        rep.per_level.push_back(lvl);
    }
    return rep;
}

int default_k_max(const paths::SampledPath& path, double lambda) {
    std::vector<double> incs;
    incs.reserve(path.size() - 1);
    for (std::size_t i = 1; i < path.size(); ++i)
        incs.push_back(std::abs(path.values[i] - path.values[i - 1]));
    std::nth_element(incs.begin(), incs.begin() + incs.size() / 2, incs.end());
    double typical = incs[incs.size() / 2];
    if (!(typical > 0.0)) return 1;
    int k = static_cast<int>(std::floor(std::log2(lambda / typical)));
    return std::max(1, k);
}

BruneauBoundCheck bruneau_bound_check(const paths::SampledPath& path, double p,
                                      double q, double t, int k_max) {
    if (!(q >= 1.0) || !(q < p)) throw std::domain_error("need 1 <= q < p");

    BruneauBoundCheck out;
    double lambda = paths::sup_abs_deviation(path, t);
    if (lambda == 0.0) {
        out.holds = true;
        return out;
    }
    out.lambda = lambda;
    out.levels = bruneau_constant(path, q, lambda, t, k_max);
    out.lhs = var_p_prefix(path, p, t);
    double factor = std::pow(2.0, p + q + 1.0) / (1.0 - std::pow(2.0, q - p));
    out.rhs = factor * (2.0 * out.levels.constant + 1.0) * std::pow(lambda, p);
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace vexcap::analysis
