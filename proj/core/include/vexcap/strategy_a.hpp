#pragma once

#include <optional>

#include "vexcap/capital.hpp"
#include "vexcap/grid.hpp"

namespace vexcap::game {

struct StrategyAResult {
    ElementaryStrategy strategy;
    double initial_capital = 0.0;        // delta^(2-p) C + 2 A delta
    double uncorrected_initial_capital = 0.0;  // delta^(2-p) C, no positivity margin
    std::optional<double> hit_time;      // first time |path| = A, on the grid
    long long active_trades = 0;
};

// Grid-momentum strategy: at every grid-crossing stopping time tau_n with
// tau_n < T and before the |path| = A hit, and while n+1 < C / delta^p,
// hold portfolio 2 * path(tau_n) (snapped grid value); zero afterwards.
// Requires A/delta integral, p in (0, 2), C > 0, A > 0, and a path starting
// at 0 (normalize first).
StrategyAResult strategy_a(const paths::SampledPath& path, double delta,
                           double p, double C, double A);

struct IdentityResiduals {
    std::vector<double> residuals;  // one per admissible N, in order
    double max_residual = 0.0;
};

// Residuals of the exact quadratic bookkeeping identity
//   path(tau_N)^2 = K_{tau_N} - delta^(2-p) C + N delta^2
// for every N with tau_N <= T and before/at the |path| = A hit and
// N < C / delta^p, evaluated with snapped grid values and the uncorrected
// initial capital.
IdentityResiduals verify_cumulative_identity(const paths::SampledPath& path,
                                             double delta, double p, double C,
                                             double A);

}  // namespace vexcap::game
