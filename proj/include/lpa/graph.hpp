#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/vertex_set.hpp"

namespace lpa {

/// Edge multiplicity: a positive integer, or omega (infinitely many parallel
/// edges between the same two vertices).
class Multiplicity {
 public:
  static constexpr Multiplicity omega() { return Multiplicity(kOmegaValue); }
  static Multiplicity finite(std::uint32_t n) {
    if (n == 0 || n == kOmegaValue) throw ValidationError("edge multiplicity must be a positive integer or omega");
    return Multiplicity(n);
  }

  constexpr bool is_omega() const { return value_ == kOmegaValue; }
  /// Count of a finite multiplicity. Meaningless for omega.
  constexpr std::uint32_t count() const { return value_; }

  friend constexpr bool operator==(Multiplicity, Multiplicity) = default;

 private:
  static constexpr std::uint32_t kOmegaValue = 0xffffffffU;
  constexpr explicit Multiplicity(std::uint32_t v) : value_(v) {}
  std::uint32_t value_;
};

/// Saturating sum of multiplicities.
struct OutMultiplicity {
  std::uint64_t finite = 0;
  bool infinite = false;

  void add(Multiplicity m) {
    if (m.is_omega()) infinite = true;
    else finite += m.count();
  }
  bool is_zero() const { return !infinite && finite == 0; }
  bool is_one() const { return !infinite && finite == 1; }
  bool is_finite_nonzero() const { return !infinite && finite > 0; }
};

struct Edge {
  VertexId src;
  VertexId dst;
  Multiplicity mult;
};

/// Edge record by vertex name, as it appears in a graph document.
struct NamedEdge {
  std::string src;
  std::string dst;
  Multiplicity mult;
};

enum class VertexKind { Sink, Regular, InfiniteEmitter };

/// A finite directed multigraph. Vertex ids are assigned in lexicographic
/// order of the vertex names, so comparing ids compares names. Immutable
/// after construction.
class Graph {
 public:
  Graph() = default;
  /// Validates and builds. Duplicate (src, dst) records are rejected rather
  /// than merged.
  Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  VertexSet all_vertices() const { return VertexSet::first(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws ValidationError for an unknown name.
  VertexId id(std::string_view name) const;
  VertexSet ids(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(VertexSet set) const;

  /// All edge records sorted by (src, dst).
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Edge> out_edges(VertexId v) const;
  /// Multiplicity of the (u, v) record, if there is one.
  std::optional<Multiplicity> edge_between(VertexId u, VertexId v) const;
  OutMultiplicity out_multiplicity(VertexId v) const;

  VertexKind kind(VertexId v) const;
  /// Vertices reachable from v by a path of length >= 0.
  VertexSet reachable_from(VertexId v) const { return reach_.at(v); }
  VertexSet reachable_from(VertexSet from) const;
  bool reaches(VertexId u, VertexId v) const { return reach_.at(u).contains(v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_.size() == b.edges_.size() && same_edges(a, b);
  }

 private:
  static bool same_edges(const Graph& a, const Graph& b);

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offset_;  // edges_[out_offset_[v] .. out_offset_[v+1])
  std::vector<VertexSet> reach_;
};

/// A vertex-distinct directed cycle stored in canonical rotation: the list
/// starts at its least vertex id (equivalently, lexicographically least name).
class Cycle {
 public:
  /// Validates that `chain` is a cycle of g (consecutive edges and the closing
  /// edge exist, vertices distinct) and rotates it into canonical form.
  static Cycle from_chain(const Graph& g, std::vector<VertexId> chain);
  /// Same, by vertex name.
  static Cycle from_names(const Graph& g, const std::vector<std::string>& chain);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexId base() const { return vertices_.front(); }
  VertexSet vertex_set() const;
  std::size_t length() const { return vertices_.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(std::vector<VertexId> v) : vertices_(std::move(v)) {}
  friend std::vector<Cycle> simple_cycles(const Graph& g);
  friend std::vector<Cycle> cycles_of_successor_map(const std::vector<std::optional<VertexId>>& succ);
  std::vector<VertexId> vertices_;
};

VertexKind vertex_kind(const Graph& g, std::string_view v);
bool reaches(const Graph& g, std::string_view u, std::string_view v);

/// All vertex-distinct cycles, sorted.
std::vector<Cycle> simple_cycles(const Graph& g);
/// Cycles every vertex of which has total out-multiplicity exactly one.
std::vector<Cycle> exitless_cycles(const Graph& g);
/// Cycles of a partial successor function (succ[v] is v's unique successor),
/// in canonical rotation and sorted.
std::vector<Cycle> cycles_of_successor_map(const std::vector<std::optional<VertexId>>& succ);

/// Every two members of D have a common member of D below them.
bool downward_directed(const Graph& g, VertexSet d);
bool downward_directed(const Graph& g, const std::vector<std::string>& d);

std::string export_dot(const Graph& g, std::string_view name = "G");
std::string to_string(VertexKind k);

}  // namespace lpa
