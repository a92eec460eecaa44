#include "lpa/graph_json.hpp"

#include <json.hpp>

namespace lpa {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

Multiplicity as_multiplicity(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "omega" || s == "ω") return Multiplicity::omega();
    throw ParseError(where + ": multiplicity must be a positive integer or \"omega\"");
  }
  if (v.is_number_integer()) {
    const auto n = v.get<std::int64_t>();
    if (n < 1) throw ValidationError(where + ": multiplicity must be >= 1, got " + std::to_string(n));
    if (n >= 0xffffffffLL) throw ValidationError(where + ": multiplicity too large");
    return Multiplicity::finite(static_cast<std::uint32_t>(n));
  }
  throw ParseError(where + ": multiplicity must be a positive integer or \"omega\"");
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");

  GraphDocument out;
  if (auto f = doc.find("field"); f != doc.end()) {
    if (!f->is_object()) throw ParseError("field: expected an object");
    const auto& p = member(*f, "p", "field");
    if (!p.is_number_integer() || p.get<std::int64_t>() < 2 || p.get<std::int64_t>() >= (std::int64_t{1} << 31))
      throw ParseError("field.p: expected an integer prime in [2, 2^31)");
    out.field_p = static_cast<std::uint32_t>(p.get<std::int64_t>());
  }

  const auto& vs = member(doc, "vertices", "document");
  if (!vs.is_array()) throw ParseError("vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], "vertices[" + std::to_string(i) + "]"));

  std::vector<NamedEdge> edges;
  if (auto es = doc.find("edges"); es != doc.end()) {
    if (!es->is_array()) throw ParseError("edges: expected an array");
    std::vector<std::string> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < es->size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& e = (*es)[i];
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      NamedEdge ne{as_string(member(e, "src", where), where + ".src"), as_string(member(e, "dst", where), where + ".dst"),
                   e.contains("mult") ? as_multiplicity(e["mult"], where + ".mult") : Multiplicity::finite(1)};
      for (const auto* field : {&ne.src, &ne.dst})
        if (!std::binary_search(sorted.begin(), sorted.end(), *field))
          throw ValidationError(where + (field == &ne.src ? ".src" : ".dst") + ": unknown vertex '" + *field + "'");
      edges.push_back(std::move(ne));
    }
  }
  out.graph = Graph(std::move(vertices), edges);
  return out;
}

Graph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

std::string render_graph_json(const Graph& g, std::optional<std::uint32_t> field_p) {
  json doc = json::object();
  if (field_p) doc["field"] = {{"p", *field_p}};
  doc["vertices"] = g.names();
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json rec = {{"src", g.name(e.src)}, {"dst", g.name(e.dst)}};
    if (e.mult.is_omega()) rec["mult"] = "omega";
    else rec["mult"] = e.mult.count();
    edges.push_back(std::move(rec));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2);
}

}  // namespace lpa
