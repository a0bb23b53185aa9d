#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vexcap/bruneau.hpp"
#include "vexcap/capital.hpp"
#include "vexcap/certificate.hpp"
#include "vexcap/sampled_path.hpp"
#include "vexcap/strategy_b.hpp"
#include "vexcap/variation.hpp"

namespace vexcap::io {

// {T, times[], values[], meta{generator, seed, params}}; round-trips doubles
// bit-exactly.
nlohmann::json path_to_json(const paths::SampledPath& path);
paths::SampledPath path_from_json(const nlohmann::json& j);

void write_path_json(const paths::SampledPath& path, const std::string& file);
paths::SampledPath read_path_json(const std::string& file);

// two columns `t,x`; plotting output only, precision is not round-trip
void write_path_csv(const paths::SampledPath& path, std::ostream& os);

nlohmann::json variation_to_json(const analysis::VariationReport& rep);
nlohmann::json bruneau_to_json(const analysis::BruneauReport& rep);
void write_bruneau_csv(const analysis::BruneauReport& rep, std::ostream& os);

nlohmann::json trajectory_to_json(const game::CapitalTrajectory& traj);
nlohmann::json strategy_b_to_json(const game::StrategyBResult& res);
nlohmann::json certificate_to_json(const game::CertificateReport& rep);
void write_certificate_csv(const game::CertificateReport& rep,
                           std::ostream& os);

}  // namespace vexcap::io
