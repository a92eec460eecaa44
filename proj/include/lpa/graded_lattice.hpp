#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// (H, S): H hereditary and saturated, S a subset of the breaking vertices of
/// H. Names the graded ideal I(H, S); u in S records that u^H lies in it.
struct AdmissiblePair {
  VertexSet H;
  VertexSet S;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// Presentation order for vertex sets: by size, then by sorted member list.
bool vertex_set_less(VertexSet a, VertexSet b);
/// Presentation order for pairs: by H, then by S (both in vertex_set_less).
bool pair_less(const AdmissiblePair& a, const AdmissiblePair& b);

bool is_hereditary(const Graph& g, VertexSet h);
/// Every regular vertex all of whose out-edges land in h belongs to h.
bool is_saturated(const Graph& g, VertexSet h);

/// Everything reachable from x, x included.
VertexSet hereditary_closure(const Graph& g, VertexSet x);
/// Least saturated superset of a hereditary set. Only regular vertices are
/// ever added. Throws PreconditionError if h is not hereditary.
VertexSet saturate(const Graph& g, VertexSet h);
/// saturate(hereditary_closure(x)).
VertexSet hereditary_saturated_closure(const Graph& g, VertexSet x);

/// Largest vertex count accepted by the subset enumeration.
inline constexpr std::size_t kMaxEnumerableVertices = 15;

/// All hereditary saturated subsets, sorted and deduplicated. Refuses graphs
/// with more than kMaxEnumerableVertices vertices.
std::vector<VertexSet> hereditary_saturated_sets(const Graph& g);

/// Infinite emitters outside h sending a finite, nonzero number of edges
/// outside h. Throws PreconditionError unless h is hereditary saturated.
VertexSet breaking_vertices(const Graph& g, VertexSet h);

std::vector<AdmissiblePair> admissible_pairs(const Graph& g);
bool is_admissible(const Graph& g, const AdmissiblePair& p);

/// H1 within H2 and S1 within H2 union S2.
bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);

/// The quotient graph E\(H,S): vertices outside H plus a primed sink v' for
/// each breaking vertex v of H not in S.
struct QuotientGraph {
  Graph graph;
  /// For each quotient vertex: the original vertex it comes from.
  std::vector<VertexId> origin;
  /// For each quotient vertex: whether it is a primed copy.
  std::vector<bool> primed;

  /// Maps a cycle of the quotient graph back to the original graph's ids.
  std::vector<VertexId> original_chain(const Cycle& c) const;
};

QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p);

/// The finite lattice of admissible pairs of one graph, enumerated once.
/// Meet and join are found by exhaustive search for the extremal bound.
/// Immutable after construction.
class GradedLattice {
 public:
  explicit GradedLattice(Graph g);

  const Graph& graph() const { return graph_; }
  const std::vector<AdmissiblePair>& pairs() const { return pairs_; }
  const std::vector<VertexSet>& hereditary_saturated() const { return hs_sets_; }

  bool contains(const AdmissiblePair& p) const;
  /// Throws ValidationError when p is not an admissible pair of this graph.
  std::size_t index_of(const AdmissiblePair& p) const;
  void require(const AdmissiblePair& p) const { (void)index_of(p); }

  AdmissiblePair bottom() const { return {}; }
  AdmissiblePair top() const { return {graph_.all_vertices(), {}}; }

  /// Breaking vertices of a hereditary saturated set of this graph.
  VertexSet breaking(VertexSet h) const;

  AdmissiblePair meet(const AdmissiblePair& a, const AdmissiblePair& b) const;
  AdmissiblePair join(const AdmissiblePair& a, const AdmissiblePair& b) const;

  /// Exitless cycles of the quotient graph by p, in original vertex ids.
  const std::vector<Cycle>& quotient_exitless_cycles(const AdmissiblePair& p) const;
  bool exitless_in_quotient(const Cycle& c, const AdmissiblePair& p) const;

  /// Cover relations (lower index, upper index) of the containment order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  std::vector<Cycle> compute_quotient_exitless(const AdmissiblePair& p) const;

  Graph graph_;
  std::vector<VertexSet> hs_sets_;
  std::vector<VertexSet> hs_breaking_;
  std::vector<AdmissiblePair> pairs_;
  std::vector<std::vector<Cycle>> exitless_;
};

AdmissiblePair pair_meet(const GradedLattice& lattice, const AdmissiblePair& a, const AdmissiblePair& b);
AdmissiblePair pair_join(const GradedLattice& lattice, const AdmissiblePair& a, const AdmissiblePair& b);

}  // namespace lpa
