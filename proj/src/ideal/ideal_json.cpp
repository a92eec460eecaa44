#include "lpa/ideal_json.hpp"

namespace lpa {

using nlohmann::json;

json vertex_set_to_json(const Graph& g, VertexSet s) { return g.names_of(s); }

VertexSet vertex_set_from_json(const Graph& g, const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of vertex names");
  VertexSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
    const auto id = g.find(j[i].get<std::string>());
    if (!id) throw ValidationError(where + "[" + std::to_string(i) + "]: unknown vertex '" + j[i].get<std::string>() + "'");
    out.insert(*id);
  }
  return out;
}

json pair_to_json(const Graph& g, const AdmissiblePair& p) {
  return {{"H", vertex_set_to_json(g, p.H)}, {"S", vertex_set_to_json(g, p.S)}};
}

json ideal_to_json(const Ideal& a) {
  const auto& g = a.algebra().graph();
  json out = pair_to_json(g, a.pair());
  out["components"] = json::array();
  for (const auto& [c, f] : a.components()) {
    std::vector<std::string> chain;
    for (VertexId v : c.vertices()) chain.push_back(g.name(v));
    out["components"].push_back({{"cycle", chain}, {"poly", to_string(f)}});
  }
  return out;
}

Ideal ideal_from_json(const AlgebraPtr& alg, const json& j) {
  const auto& g = alg->graph();
  if (!j.is_object()) throw ParseError("ideal: expected an object");
  AdmissiblePair pair;
  if (auto h = j.find("H"); h != j.end()) pair.H = vertex_set_from_json(g, *h, "H");
  if (auto s = j.find("S"); s != j.end()) pair.S = vertex_set_from_json(g, *s, "S");
  if (!alg->lattice().contains(pair)) throw ValidationError("(H, S) is not an admissible pair of the graph");

  ComponentMap comps;
  if (auto cs = j.find("components"); cs != j.end()) {
    if (!cs->is_array()) throw ParseError("components: expected an array");
    for (std::size_t i = 0; i < cs->size(); ++i) {
      const std::string where = "components[" + std::to_string(i) + "]";
      const auto& item = (*cs)[i];
      if (!item.is_object() || !item.contains("cycle") || !item.contains("poly"))
        throw ParseError(where + ": expected {\"cycle\": [...], \"poly\": \"...\"}");
      const auto& chain = item["cycle"];
      if (!chain.is_array() || chain.empty()) throw ParseError(where + ".cycle: expected a nonempty array");
      std::vector<std::string> names;
      for (const auto& v : chain) {
        if (!v.is_string()) throw ParseError(where + ".cycle: expected vertex names");
        names.push_back(v.get<std::string>());
      }
      if (!item["poly"].is_string()) throw ParseError(where + ".poly: expected a string");
      const Cycle c = Cycle::from_names(g, names);
      if (comps.contains(c)) throw ValidationError(where + ": cycle listed twice");
      comps.emplace(c, parse_poly(item["poly"].get<std::string>(), alg->field()));
    }
  }
  return canonicalize(alg, pair, comps);
}

Ideal parse_ideal_json(const AlgebraPtr& alg, std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return ideal_from_json(alg, j);
}

}  // namespace lpa
