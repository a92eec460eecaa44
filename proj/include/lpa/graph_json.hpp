#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lpa/graph.hpp"

namespace lpa {

/// A parsed graph document: the graph plus the optional "field" block.
struct GraphDocument {
  Graph graph;
  std::optional<std::uint32_t> field_p;
};

/// Parses {"field":{"p":P}, "vertices":[...], "edges":[{"src","dst","mult"}...]}.
/// Syntax errors carry line/column; semantic errors name the offending field
/// (e.g. "edges[2].dst").
GraphDocument parse_graph_document(std::string_view text);
Graph parse_graph(std::string_view text);

std::string render_graph_json(const Graph& g, std::optional<std::uint32_t> field_p = std::nullopt);

}  // namespace lpa
