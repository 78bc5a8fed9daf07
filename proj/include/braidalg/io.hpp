#pragma once

#include <string>

#include <json.hpp>

#include "braidalg/constructions.hpp"
#include "braidalg/hopf.hpp"

namespace braidalg {

/// Parseable expression form of a polynomial / group algebra element.
std::string poly_to_expr(const NCPoly& p);
std::string group_alg_to_expr(const GroupAlgElem& e);

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
void save_presentation(const Presentation& p, const std::string& path);
Presentation load_presentation(const std::string& path);

nlohmann::json bicharacter_to_json(const Bicharacter& b);
Bicharacter bicharacter_from_json(const nlohmann::json& j, const ScalarRingPtr& ring);
Bicharacter load_bicharacter(const std::string& path, const ScalarRingPtr& ring);

SubgroupSpec subgroup_from_json(const nlohmann::json& j, const FgAbelianGroup& ambient);
SubgroupSpec load_subgroup(const std::string& path, const FgAbelianGroup& ambient);

/// Canonical report serialization: schema-versioned, sorted keys; timing is
/// only included when timing_ms >= 0 so that default output stays
/// byte-deterministic for fixed inputs and caps.
nlohmann::json report_to_json(const Report& r, long timing_ms = -1);

} // namespace braidalg
