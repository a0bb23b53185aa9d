#include "vexcap/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vexcap/capital.hpp"
#include "vexcap/events.hpp"
#include "vexcap/strategy_a.hpp"
#include "vexcap/strategy_b.hpp"

namespace vexcap::game {

CertificateReport superhedge_certificate(
    const std::vector<paths::SampledPath>& corpus,
    const std::vector<std::string>& path_ids, const EventSpec& event,
    const StrategySpec& builder, double tolerance) {
    if (!path_ids.empty() && path_ids.size() != corpus.size())
        throw std::invalid_argument("path_ids must match corpus size");

    const bool event_below = std::holds_alternative<EventVarBelow>(event);
    const bool strat_a = std::holds_alternative<StrategyASpec>(builder);
    if (event_below != strat_a)
        throw std::invalid_argument(
            "event/strategy family mismatch: var-below pairs with strategy A, "
            "var-large with strategy B");

    CertificateReport rep;
    rep.positivity_tolerance = tolerance;
    rep.event_name = event_below ? "var_below" : "var_large";
    rep.strategy_name = strat_a ? "strategy_a" : "strategy_b";

    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const auto norm = paths::normalized(corpus[idx]);

        PathOutcome o;
        o.path_id = path_ids.empty() ? "path_" + std::to_string(idx)
                                     : path_ids[idx];

        if (strat_a) {
            const auto& sp = std::get<StrategyASpec>(builder);
            const auto& ev = std::get<EventVarBelow>(event);
            StrategyAResult r =
                strategy_a(norm, sp.delta, sp.p, sp.C, sp.A);
            CapitalSummary s =
                evaluate_strategy(norm, r.strategy, r.initial_capital);
            rep.initial_capital = r.initial_capital;
            o.in_event = event_var_below(norm, ev.p, ev.C, ev.A);
            o.terminal_capital = s.terminal_capital;
            o.min_capital = s.min_capital;
        } else {
            const auto& sp = std::get<StrategyBSpec>(builder);
            const auto& ev = std::get<EventVarLarge>(event);
            StrategyBResult r = strategy_b(norm, sp.q, sp.A, sp.k_levels);
            rep.initial_capital = r.ensemble.initial_capital;
            o.in_event = event_var_large(norm, ev.p, ev.A, ev.V);
            o.terminal_capital = r.terminal_capital;
            o.min_capital = r.min_capital;
        }

        if (o.min_capital < -tolerance && rep.positivity_ok) {
            rep.positivity_ok = false;
            rep.offending_path = o.path_id;
        }
        rep.per_path.push_back(std::move(o));
    }

    if (rep.positivity_ok) {
        double min_terminal = 0.0;
        bool any = false;
        for (const auto& o : rep.per_path)
            if (o.in_event) {
                min_terminal = any ? std::min(min_terminal, o.terminal_capital)
                                   : o.terminal_capital;
                any = true;
            }
        if (any && min_terminal > 0.0)
            rep.certified_bound = rep.initial_capital / min_terminal;
    }
    return rep;
}

}  // namespace vexcap::game
