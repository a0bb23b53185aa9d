#pragma once

#include <string>
#include <vector>

#include "vexcap/capital.hpp"
#include "vexcap/doob.hpp"

namespace vexcap::game {

struct EnsembleComponent {
    ElementaryStrategy strategy;
    double initial_capital = 0.0;  // c_n >= 0
    double weight = 0.0;           // >= 0
    int k = 0;
    int i = 0;
    long long upcrossings = 0;
    double min_capital = 0.0;      // of the unweighted component trajectory
    double terminal_capital = 0.0;
};

/// Truncated weighted sum of positive elementary capital trajectories; the
/// omitted tail's initial capital is bounded in tail_bound.
struct PositiveCapitalEnsemble {
    std::vector<EnsembleComponent> components;
    double initial_capital = 0.0;  // sum of weight * c_n over the truncation
    double tail_bound = 0.0;       // initial capital of the omitted k > K tail
    std::string truncation_note;
};

struct EnsembleLevel {
    int k = 0;
    double mesh = 0.0;          // A 2^-k
    long long upcrossings = 0;  // sum over i of component upcrossings
    double weighted = 0.0;      // 2^-kq * upcrossings
};

struct StrategyBResult {
    PositiveCapitalEnsemble ensemble;
    double stop_time = 0.0;  // first exit of the open band (-A, A), else T
    double terminal_capital = 0.0;
    double min_capital = 0.0;  // weighted sum of component minima (>= 0)
    std::vector<EnsembleLevel> per_level;
    double truncated_bruneau = 0.0;      // max over levels of weighted
    double initial_capital_bound = 0.0;  // 2^(3-q) / (1 - 2^(2-q))
};

// Doob-upcrossing ensemble: for k = 1..k_levels and i = -2^k+1 .. 2^k, an
// upcrossing harvester over ((i-1) A 2^-k, i A 2^-k) with floor -A, weighted
// by 2^-kq / (A 2^-k); all trading stops at the band exit. The ensemble's
// terminal capital dominates the truncated Bruneau constant at lambda = A.
// Requires q > 2 (the level series diverges otherwise), A > 0, k_levels >= 1.
StrategyBResult strategy_b(const paths::SampledPath& path, double q, double A,
                           int k_levels);

}  // namespace vexcap::game
