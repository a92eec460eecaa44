#pragma once

#include <json.hpp>
#include <string_view>

#include "lpa/ideal.hpp"

namespace lpa {

nlohmann::json vertex_set_to_json(const Graph& g, VertexSet s);
/// Throws ValidationError on unknown vertex names; `where` prefixes messages.
VertexSet vertex_set_from_json(const Graph& g, const nlohmann::json& j, const std::string& where);

/// {"H":[...],"S":[...]}
nlohmann::json pair_to_json(const Graph& g, const AdmissiblePair& p);
/// {"H":[...],"S":[...],"components":[{"cycle":[...],"poly":"..."}...]}
nlohmann::json ideal_to_json(const Ideal& a);
/// Inverse of ideal_to_json; the result is passed through canonicalize.
Ideal ideal_from_json(const AlgebraPtr& alg, const nlohmann::json& j);
Ideal parse_ideal_json(const AlgebraPtr& alg, std::string_view text);

}  // namespace lpa
