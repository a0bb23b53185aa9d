#include "vexcap/strategy_a.hpp"

#include <cmath>
#include <stdexcept>

namespace vexcap::game {

namespace {

struct GridSetup {
    paths::GridCrossingSequence seq;
    long long level_cap = 0;     // A / delta
    std::size_t hit_index = 0;   // index into entries of the |value| = A hit,
                                 // entries.size() if never hit
    double cutoff = 0.0;         // C / delta^p
};

GridSetup setup(const paths::SampledPath& path, double delta, double p,
                double C, double A) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (!(p > 0.0 && p < 2.0)) throw std::domain_error("p must lie in (0, 2)");
    if (!(C > 0.0)) throw std::invalid_argument("C must be positive");
    if (!(A > 0.0)) throw std::invalid_argument("A must be positive");
    double ratio = A / delta;
    long long cap = std::llround(ratio);
    if (cap < 1 || std::abs(ratio - static_cast<double>(cap)) > 1e-9)
        throw std::invalid_argument("A / delta must be a positive integer");
    if (path.values.front() != 0.0)
        throw std::invalid_argument("path must start at 0 (normalize first)");

    GridSetup g;
    g.seq = paths::grid_crossings(path, delta);
    g.level_cap = cap;
    g.cutoff = C / std::pow(delta, p);
    g.hit_index = g.seq.entries.size();
    for (std::size_t n = 0; n < g.seq.entries.size(); ++n) {
        if (std::llabs(g.seq.entries[n].level) == cap) {
            g.hit_index = n;
            break;
        }
    }
    return g;
}

}  // namespace

StrategyAResult strategy_a(const paths::SampledPath& path, double delta,
                           double p, double C, double A) {
    GridSetup g = setup(path, delta, p, C, A);
    const double T = path.horizon();

    StrategyAResult out;
    out.uncorrected_initial_capital = std::pow(delta, 2.0 - p) * C;
    out.initial_capital = out.uncorrected_initial_capital + 2.0 * A * delta;
    if (g.hit_index < g.seq.entries.size())
        out.hit_time = g.seq.entries[g.hit_index].time;

    out.strategy.provenance = Provenance::strategy_a;
    out.strategy.params = {{"delta", delta}, {"p", p}, {"C", C}, {"A", A}};

    // tau_n is the n-th crossing (1-based); no position on [tau_0, tau_1]
    for (std::size_t idx = 0; idx < g.seq.entries.size(); ++idx) {
        const auto& e = g.seq.entries[idx];
        std::size_t n = idx + 1;
        bool active = e.time < T && idx < g.hit_index &&
                      static_cast<double>(n + 1) < g.cutoff;
        double h = active ? 2.0 * e.value : 0.0;
        out.strategy.trades.push_back({e.time, h, e.value});
        if (active) {
            ++out.active_trades;
        } else {
            break;  // h stays 0 from here on; one closing trade suffices
        }
    }
    return out;
}

IdentityResiduals verify_cumulative_identity(const paths::SampledPath& path,
                                             double delta, double p, double C,
                                             double A) {
    GridSetup g = setup(path, delta, p, C, A);
    const double T = path.horizon();
    const double c = std::pow(delta, 2.0 - p) * C;

    IdentityResiduals out;
    // K at tau_N via snapped telescoping: K_{tau_N} = c + sum_{n<N} h_n
    // (v_{n+1} - v_n) with h_n the strategy's portfolio at tau_n
    double capital = c;
    for (std::size_t idx = 0; idx < g.seq.entries.size(); ++idx) {
        std::size_t N = idx + 1;
        const auto& e = g.seq.entries[idx];
        bool admissible = e.time <= T && idx <= g.hit_index &&
                          static_cast<double>(N) < g.cutoff;
        if (admissible) {
            double v = e.value;
            double residual = std::abs(v * v - capital + c -
                                       static_cast<double>(N) * delta * delta);
            out.residuals.push_back(residual);
            out.max_residual = std::max(out.max_residual, residual);
        }
        // accumulate the gain of trade n = N over (tau_N, tau_{N+1}]
        if (idx + 1 < g.seq.entries.size()) {
            bool active = e.time < T && idx < g.hit_index &&
                          static_cast<double>(N + 1) < g.cutoff;
            double h = active ? 2.0 * e.value : 0.0;
            capital += h * (g.seq.entries[idx + 1].value - e.value);
        }
    }
    return out;
}

}  // namespace vexcap::game
