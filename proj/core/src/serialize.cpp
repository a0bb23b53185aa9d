#include "vexcap/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace vexcap::io {

using nlohmann::json;

json path_to_json(const paths::SampledPath& path) {
    return json{{"T", path.horizon()},
                {"times", path.times},
                {"values", path.values},
                {"meta",
                 {{"generator", path.generator},
                  {"seed", path.seed},
                  {"params", path.params},
                  {"origin_offset", path.origin_offset}}}};
}

paths::SampledPath path_from_json(const json& j) {
    paths::SampledPath p = paths::make_path(
        j.at("times").get<std::vector<double>>(),
        j.at("values").get<std::vector<double>>());
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        p.generator = m.value("generator", std::string("unknown"));
        p.seed = m.value("seed", std::uint64_t{0});
        if (m.contains("params")) p.params = m.at("params");
        p.origin_offset = m.value("origin_offset", 0.0);
    }
    if (j.contains("T") && j.at("T").get<double>() != p.horizon())
        throw std::invalid_argument("path JSON: T disagrees with times");
    return p;
}

void write_path_json(const paths::SampledPath& path, const std::string& file) {
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot open for writing: " + file);
    os << path_to_json(path) << '\n';
}

paths::SampledPath read_path_json(const std::string& file) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open: " + file);
    json j;
    is >> j;
    return path_from_json(j);
}

void write_path_csv(const paths::SampledPath& path, std::ostream& os) {
    os << "t,x\n" << std::setprecision(12);
    for (std::size_t i = 0; i < path.size(); ++i)
        os << path.times[i] << ',' << path.values[i] << '\n';
}

json variation_to_json(const analysis::VariationReport& rep) {
    json j{{"p", rep.p}};
    if (rep.value.is_infinite()) {
        j["value"] = "infinity";
        j["infinite"] = true;
    } else {
        j["value"] = rep.value.value();
        j["infinite"] = false;
        j["maximizing_subdivision"] = rep.maximizing_subdivision;
    }
    return j;
}

json bruneau_to_json(const analysis::BruneauReport& rep) {
    json levels = json::array();
    for (const auto& l : rep.per_level)
        levels.push_back({{"k", l.k},
                          {"mesh", l.mesh},
                          {"upcrossings", l.upcrossings},
                          {"weighted", l.weighted}});
    return json{{"q", rep.q},          {"lambda", rep.lambda},
                {"t", rep.t},          {"k_max", rep.k_max},
                {"per_level", levels}, {"constant", rep.constant},
                {"saturated", rep.saturated}};
}

void write_bruneau_csv(const analysis::BruneauReport& rep, std::ostream& os) {
    os << "k,mesh,M,weighted\n" << std::setprecision(12);
    for (const auto& l : rep.per_level)
        os << l.k << ',' << l.mesh << ',' << l.upcrossings << ','
           << l.weighted << '\n';
}

json trajectory_to_json(const game::CapitalTrajectory& traj) {
    return json{{"initial_capital", traj.initial_capital},
                {"times", traj.times},
                {"capital", traj.capital},
                {"min_capital", traj.min_capital},
                {"terminal_capital", traj.terminal_capital}};
}

json strategy_b_to_json(const game::StrategyBResult& res) {
    json levels = json::array();
    for (const auto& l : res.per_level)
        levels.push_back({{"k", l.k},
                          {"mesh", l.mesh},
                          {"upcrossings", l.upcrossings},
                          {"weighted", l.weighted}});
    return json{{"initial_capital", res.ensemble.initial_capital},
                {"initial_capital_bound", res.initial_capital_bound},
                {"tail_bound", res.ensemble.tail_bound},
                {"truncation_note", res.ensemble.truncation_note},
                {"stop_time", res.stop_time},
                {"terminal_capital", res.terminal_capital},
                {"min_capital", res.min_capital},
                {"per_level", levels},
                {"truncated_bruneau", res.truncated_bruneau},
                {"components", res.ensemble.components.size()}};
}

json certificate_to_json(const game::CertificateReport& rep) {
    json per_path = json::array();
    for (const auto& o : rep.per_path)
        per_path.push_back({{"path_id", o.path_id},
                            {"in_event", o.in_event},
                            {"terminal_capital", o.terminal_capital},
                            {"min_capital", o.min_capital}});
    json j{{"event", rep.event_name},
           {"strategy", rep.strategy_name},
           {"initial_capital", rep.initial_capital},
           {"positivity_tolerance", rep.positivity_tolerance},
           {"positivity_ok", rep.positivity_ok},
           {"per_path", per_path}};
    if (!rep.positivity_ok) j["offending_path"] = rep.offending_path;
    if (rep.certified_bound) j["certified_bound"] = *rep.certified_bound;
    return j;
}

void write_certificate_csv(const game::CertificateReport& rep,
                           std::ostream& os) {
    os << "path_id,in_event,initial_capital,min_capital,terminal_capital\n"
       << std::setprecision(12);
    for (const auto& o : rep.per_path)
        os << o.path_id << ',' << (o.in_event ? 1 : 0) << ','
           << rep.initial_capital << ',' << o.min_capital << ','
           << o.terminal_capital << '\n';
}

}  // namespace vexcap::io
