#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vexcap/sampled_path.hpp"

namespace vexcap::game {

struct EventVarBelow {  // { var_p < C and sup |path| > A }
    double p = 1.0;
    double C = 1.0;
    double A = 1.0;
};
struct EventVarLarge {  // { var_p >= V and sup |path| < A }
    double p = 3.0;
    double A = 1.0;
    double V = 1.0;
};
using EventSpec = std::variant<EventVarBelow, EventVarLarge>;

struct StrategyASpec {
    double delta = 0.01;
    double p = 1.0;
    double C = 1.0;
    double A = 1.0;
};
struct StrategyBSpec {
    double q = 3.0;
    double A = 1.0;
    int k_levels = 6;
};
using StrategySpec = std::variant<StrategyASpec, StrategyBSpec>;

struct PathOutcome {
    std::string path_id;
    bool in_event = false;
    double terminal_capital = 0.0;
    double min_capital = 0.0;
};

/// Empirical superhedging witness: one strategy family with fixed parameters
/// run over a corpus. A bound is certified only when positivity held on every
/// path (not just the in-event ones).
struct CertificateReport {
    std::string event_name;
    std::string strategy_name;
    double initial_capital = 0.0;
    double positivity_tolerance = 1e-9;
    std::vector<PathOutcome> per_path;
    bool positivity_ok = true;
    std::string offending_path;  // set when positivity_ok is false
    // initial capital / min terminal over in-event paths; absent when the
    // corpus has no in-event path or positivity failed
    std::optional<double> certified_bound;
};

inline constexpr double kPositivityTolerance = 1e-9;

// Runs the builder on every path (paths are normalized to start at 0 first).
// Event and strategy families must match: EventVarBelow pairs with strategy
// A, EventVarLarge with strategy B; a mismatch throws std::invalid_argument.
CertificateReport superhedge_certificate(
    const std::vector<paths::SampledPath>& corpus,
    const std::vector<std::string>& path_ids, const EventSpec& event,
    const StrategySpec& builder, double tolerance = kPositivityTolerance);

}  // namespace vexcap::game
