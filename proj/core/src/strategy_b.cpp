#include "vexcap/strategy_b.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vexcap/grid.hpp"

namespace vexcap::game {

StrategyBResult strategy_b(const paths::SampledPath& path, double q, double A,
                           int k_levels) {
    if (!(q > 2.0)) throw std::domain_error("q must exceed 2");
    if (!(A > 0.0)) throw std::invalid_argument("A must be positive");
    if (k_levels < 1) throw std::invalid_argument("k_levels must be >= 1");

    StrategyBResult out;
    auto exit_time = paths::hitting_time(path, A, paths::HitMode::absolute);
    out.stop_time = exit_time ? *exit_time : path.horizon();
    out.initial_capital_bound =
        std::pow(2.0, 3.0 - q) / (1.0 - std::pow(2.0, 2.0 - q));

    for (int k = 1; k <= k_levels; ++k) {
        double mesh = A * std::pow(2.0, -k);
        double level_weight = std::pow(2.0, -k * static_cast<double>(q)) / mesh;

        EnsembleLevel lvl;
        lvl.k = k;
        lvl.mesh = mesh;

        long long i_lo = -(1LL << k) + 1, i_hi = 1LL << k;
        for (long long i = i_lo; i <= i_hi; ++i) {
            double a = static_cast<double>(i - 1) * mesh;
            double b = static_cast<double>(i) * mesh;
            DoobResult d = doob_strategy(path, a, b, -A, out.stop_time);
            CapitalSummary s =
                evaluate_strategy(path, d.strategy, d.initial_capital);

            EnsembleComponent comp;
            comp.strategy = std::move(d.strategy);
            comp.initial_capital = d.initial_capital;  // A + (i-1) A 2^-k
            comp.weight = level_weight;
            comp.k = k;
            comp.i = static_cast<int>(i);
            comp.upcrossings = d.completed_upcrossings;
            comp.min_capital = s.min_capital;
            comp.terminal_capital = s.terminal_capital;

            out.ensemble.initial_capital += comp.weight * comp.initial_capital;
            out.terminal_capital += comp.weight * comp.terminal_capital;
            out.min_capital += comp.weight * comp.min_capital;
            lvl.upcrossings += comp.upcrossings;
            out.ensemble.components.push_back(std::move(comp));
        }

        lvl.weighted = std::pow(2.0, -k * static_cast<double>(q)) *
                       static_cast<double>(lvl.upcrossings);
        out.truncated_bruneau = std::max(out.truncated_bruneau, lvl.weighted);
        out.per_level.push_back(lvl);
    }

    // initial capital of the omitted k > K tail:
    // sum_{k>K} 2^-kq 2^(2k+1) = 2 * 2^((2-q)(K+1)) / (1 - 2^(2-q))
    out.ensemble.tail_bound = 2.0 *
                              std::pow(2.0, (2.0 - q) * (k_levels + 1)) /
                              (1.0 - std::pow(2.0, 2.0 - q));
    std::ostringstream note;
    note << "levels k > " << k_levels
         << " omitted; their total initial capital is at most "
         << out.ensemble.tail_bound;
    out.ensemble.truncation_note = note.str();
    return out;
}

}  // namespace vexcap::game
