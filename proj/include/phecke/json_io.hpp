#pragma once

#include <string>

#include <json.hpp>

#include "phecke/hecke.hpp"

namespace phecke {

using Json = nlohmann::json;

Json welem_to_json(const WeylGroup& W, const WElem& w);
WElem welem_from_json(const WeylGroup& W, const Json& j);

Json propelem_to_json(const ProPGroup& G, const ProPElem& g);
ProPElem propelem_from_json(const ProPGroup& G, const Json& j);

Json hecke_to_json(const HeckeAlgebra& A, const HeckeElem& h);
HeckeElem hecke_from_json(const HeckeAlgebra& A, const Json& j);

Json rootdatum_to_json(const RootDatum& d);
RootDatum rootdatum_from_json(const Json& j);

// orientation spec strings: chamber:<WElem-json> | spherical:<perm>,
// with trailing modifiers .op and .act(<WElem-json>)
Orientation orientation_from_spec(const WeylGroup& W, const std::string& spec);

}  // namespace phecke
