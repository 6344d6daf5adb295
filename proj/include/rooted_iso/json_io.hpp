#pragma once

#include <json.hpp>

#include "rooted_iso/census.hpp"
#include "rooted_iso/group_spec.hpp"
#include "rooted_iso/orbit_tree.hpp"
#include "rooted_iso/portrait.hpp"

namespace rooted_iso {

using json = nlohmann::json;

json valency_to_json(const ValencySeq &vs);
ValencySeq valency_from_json(const json &j);

// {"valency": [...], "depth": n, "perms": {"<word>": [images...]}}
// with vertex words as digit strings ("" for the root); round-trips
// bit-exactly through dump().
json portrait_to_json(const Portrait &g);
Portrait portrait_from_json(const json &j);

json orbit_tree_to_json(const OrbitTree &t);
std::string orbit_tree_to_dot(const OrbitTree &t);

json group_spec_to_json(const GroupSpec &spec);
GroupSpec group_spec_from_json(const json &j);

json census_to_json(const CensusResult &result);
std::string census_to_csv(const CensusResult &result);

json growth_report_to_json(const GrowthReport &report);

json rational_fit_to_json(const RationalFit &fit);

} // namespace rooted_iso
