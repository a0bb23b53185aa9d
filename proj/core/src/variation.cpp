#include "vexcap/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vexcap::analysis {

namespace {

// Indices of the direction-change skeleton: endpoints plus strict local
// extrema, flat runs collapsed. For p >= 1 a maximizing subdivision can be
// moved onto these points without decreasing the sum.
std::vector<std::size_t> extrema_indices(const std::vector<double>& x) {
    // collapse flat runs, then keep endpoints and strict direction changes
    std::vector<std::size_t> dedup;
    dedup.push_back(0);
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] != x[dedup.back()]) dedup.push_back(i);

    std::vector<std::size_t> keep;
    keep.push_back(dedup.front());
    for (std::size_t j = 1; j + 1 < dedup.size(); ++j) {
        double d1 = x[dedup[j]] - x[dedup[j - 1]];
        double d2 = x[dedup[j + 1]] - x[dedup[j]];
        if (d1 * d2 < 0.0) keep.push_back(dedup[j]);
    }
    if (dedup.back() != keep.back()) keep.push_back(dedup.back());
    if (keep.back() != x.size() - 1) keep.push_back(x.size() - 1);
    return keep;
}

}  // namespace

VariationReport var_p(const paths::SampledPath& path, double p) {
    if (!(p > 0.0)) throw std::domain_error("p must be positive");

    VariationReport rep;
    rep.p = p;

    if (paths::is_constant(path)) {
        rep.value = ExtReal::finite(0.0);
        rep.maximizing_subdivision = {0, path.size() - 1};
        return rep;
    }
    if (p < 1.0) {
        rep.value = ExtReal::infinity();
        return rep;
    }

    const auto& x = path.values;
    std::vector<std::size_t> ext = extrema_indices(x);
    const std::size_t m = ext.size();

    std::vector<double> best(m, 0.0);
    std::vector<std::size_t> parent(m, 0);
    for (std::size_t j = 1; j < m; ++j) {
        double bj = -1.0;
        std::size_t pj = 0;
        for (std::size_t i = 0; i < j; ++i) {
            double cand = best[i] + std::pow(std::abs(x[ext[j]] - x[ext[i]]), p);
            if (cand > bj) {
                bj = cand;
                pj = i;
            }
        }
        best[j] = bj;
        parent[j] = pj;
    }

    rep.value = ExtReal::finite(best[m - 1]);
    std::vector<std::size_t> sub;
    for (std::size_t j = m - 1;; j = parent[j]) {
        sub.push_back(ext[j]);
        if (j == 0) break;
    }
    std::reverse(sub.begin(), sub.end());
    rep.maximizing_subdivision = std::move(sub);
    return rep;
}

double var_p_bruteforce(const paths::SampledPath& path, double p) {
    if (!(p >= 1.0)) throw std::domain_error("p must be >= 1");
    const std::size_t n = path.size();
    if (n > 16) throw std::invalid_argument("brute force limited to 16 samples");

    const auto& x = path.values;
    const std::size_t interior = n - 2;
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
        double sum = 0.0;
        double prev = x[0];
        for (std::size_t i = 0; i < interior; ++i) {
            if (mask & (1u << i)) {
                sum += std::pow(std::abs(x[i + 1] - prev), p);
                prev = x[i + 1];
            }
        }
        sum += std::pow(std::abs(x[n - 1] - prev), p);
        best = std::max(best, sum);
    }
    return best;
}

double var_p_prefix(const paths::SampledPath& path, double p, double t) {
    if (!(p >= 1.0)) throw std::domain_error("p must be >= 1");
    if (t < 0.0 || t > path.horizon())
        throw std::domain_error("t outside [0, T]");
    if (t == 0.0) return 0.0;
    return var_p(paths::truncated(path, t), p).value.value();
}

double vex_estimate(const paths::SampledPath& path,
                    const std::vector<double>& p_grid, int levels) {
    if (levels < 2) throw std::invalid_argument("levels must be >= 2");
    if (p_grid.size() < 2) throw std::invalid_argument("p_grid needs >= 2 points");
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        if (!(p_grid[i] > p_grid[i - 1]))
            throw std::invalid_argument("p_grid must be increasing");
    if (path.size() < (std::size_t{1} << levels))
        throw std::invalid_argument("path has too few samples for `levels`");

    if (paths::is_constant(path)) return 0.0;

    const double T = path.horizon();
    const double threshold = std::log2(1.05);

    // dyadic increments per level, shared across p
    std::vector<std::vector<double>> incs(static_cast<std::size_t>(levels) + 1);
    for (int m = 1; m <= levels; ++m) {
        std::size_t cells = std::size_t{1} << m;
        auto& v = incs[static_cast<std::size_t>(m)];
        v.resize(cells);
        double prev = path.values.front();
        for (std::size_t j = 1; j <= cells; ++j) {
            double cur = (j == cells)
                             ? path.values.back()
                             : paths::evaluate(path, T * static_cast<double>(j) /
                                                         static_cast<double>(cells));
            v[j - 1] = std::abs(cur - prev);
            prev = cur;
        }
    }

    // mean log2 growth ratio over the top (up to) three level transitions
    auto growth = [&](double p) {
        int lo = std::max(1, levels - 3);
        double sum = 0.0;
        int cnt = 0;
        double vprev = 0.0;
        for (int m = lo; m <= levels; ++m) {
            double v = 0.0;
            for (double d : incs[static_cast<std::size_t>(m)])
                v += std::pow(d, p);
            if (m > lo) {
                sum += std::log2(std::max(v, 1e-300) / std::max(vprev, 1e-300));
                ++cnt;
            }
            vprev = v;
        }
        return sum / static_cast<double>(cnt);
    };

    std::vector<double> g(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) g[i] = growth(p_grid[i]);

    // largest grid index still growing
    std::size_t last_grow = p_grid.size();  // none
    for (std::size_t i = 0; i < p_grid.size(); ++i)
        if (g[i] >= threshold) last_grow = i;

    if (last_grow == p_grid.size()) return p_grid.front();
    if (last_grow + 1 == p_grid.size()) return p_grid.back();

    double g0 = g[last_grow], g1 = g[last_grow + 1];
    double p0 = p_grid[last_grow], p1 = p_grid[last_grow + 1];
    if (g0 == g1) return p0;
    return p0 + (p1 - p0) * (g0 - threshold) / (g0 - g1);
}

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 30; ++i) grid.push_back(1.0 + 0.1 * i);
    return grid;
}

}  // namespace vexcap::analysis
