#include "lpa/graded_lattice.hpp"

#include <algorithm>
#include <set>

namespace lpa {

bool vertex_set_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

bool pair_less(const AdmissiblePair& a, const AdmissiblePair& b) {
  if (a.H != b.H) return vertex_set_less(a.H, b.H);
  if (a.S != b.S) return vertex_set_less(a.S, b.S);
  return false;
}

bool is_hereditary(const Graph& g, VertexSet h) { return g.reachable_from(h).subset_of(h); }

bool is_saturated(const Graph& g, VertexSet h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || g.kind(v) != VertexKind::Regular) continue;
    const auto out = g.out_edges(v);
    if (std::all_of(out.begin(), out.end(), [&](const Edge& e) { return h.contains(e.dst); })) return false;
  }
  return true;
}

VertexSet hereditary_closure(const Graph& g, VertexSet x) {
  if (!x.subset_of(g.all_vertices())) throw ValidationError("vertex set is not contained in the graph");
  return g.reachable_from(x);
}

VertexSet saturate(const Graph& g, VertexSet h) {
  if (!h.subset_of(g.all_vertices())) throw ValidationError("vertex set is not contained in the graph");
  if (!is_hereditary(g, h)) throw PreconditionError("saturate: input set is not hereditary");
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (h.contains(v) || g.kind(v) != VertexKind::Regular) continue;
      const auto out = g.out_edges(v);
      if (std::all_of(out.begin(), out.end(), [&](const Edge& e) { return h.contains(e.dst); })) {
        h.insert(v);
        grew = true;
      }
    }
  }
  return h;
}

VertexSet hereditary_saturated_closure(const Graph& g, VertexSet x) { return saturate(g, hereditary_closure(g, x)); }

std::vector<VertexSet> hereditary_saturated_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxEnumerableVertices)
    throw PreconditionError("graph has " + std::to_string(n) + " vertices; lattice enumeration is limited to " +
                            std::to_string(kMaxEnumerableVertices));
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet closed = hereditary_saturated_closure(g, VertexSet(bits));
    if (seen.insert(closed.bits()).second) out.push_back(closed);
  }
  std::sort(out.begin(), out.end(), vertex_set_less);
  return out;
}

VertexSet breaking_vertices(const Graph& g, VertexSet h) {
  if (!h.subset_of(g.all_vertices())) throw ValidationError("vertex set is not contained in the graph");
  if (!is_hereditary(g, h) || !is_saturated(g, h))
    throw PreconditionError("breaking_vertices: input set is not hereditary saturated");
  VertexSet out;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (h.contains(w) || g.kind(w) != VertexKind::InfiniteEmitter) continue;
    OutMultiplicity outside;
    for (const auto& e : g.out_edges(w))
      if (!h.contains(e.dst)) outside.add(e.mult);
    if (outside.is_finite_nonzero()) out.insert(w);
  }
  return out;
}

namespace {

std::vector<VertexSet> subsets_of(VertexSet s) {
  std::vector<VertexSet> out;
  const std::uint64_t bits = s.bits();
  std::uint64_t sub = 0;
  do {
    out.emplace_back(sub);
    sub = (sub - bits) & bits;
  } while (sub != 0);
  return out;
}

}  // namespace

std::vector<AdmissiblePair> admissible_pairs(const Graph& g) {
  std::vector<AdmissiblePair> out;
  for (VertexSet h : hereditary_saturated_sets(g))
    for (VertexSet s : subsets_of(breaking_vertices(g, h))) out.push_back({h, s});
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

bool is_admissible(const Graph& g, const AdmissiblePair& p) {
  if (!p.H.subset_of(g.all_vertices()) || !p.S.subset_of(g.all_vertices())) return false;
  if (!is_hereditary(g, p.H) || !is_saturated(g, p.H)) return false;
  return p.S.subset_of(breaking_vertices(g, p.H));
}

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  return a.H.subset_of(b.H) && a.S.subset_of(b.H | b.S);
}

std::vector<VertexId> QuotientGraph::original_chain(const Cycle& c) const {
  std::vector<VertexId> out;
  for (VertexId v : c.vertices()) out.push_back(origin.at(v));
  return out;
}

QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p) {
  if (!is_admissible(g, p)) throw ValidationError("quotient_graph: not an admissible pair of this graph");
  const VertexSet unsent = breaking_vertices(g, p.H) - p.S;
  const VertexSet kept = g.all_vertices() - p.H;

  auto primed_name = [&](VertexId v) { return g.name(v) + "'"; };
  std::vector<std::string> names = g.names_of(kept);
  unsent.for_each([&](VertexId v) {
    if (g.find(primed_name(v))) throw ValidationError("quotient_graph: primed name '" + primed_name(v) + "' collides with a vertex");
    names.push_back(primed_name(v));
  });

  std::vector<NamedEdge> edges;
  for (const auto& e : g.edges()) {
    if (!kept.contains(e.src) || p.H.contains(e.dst)) continue;
    edges.push_back({g.name(e.src), g.name(e.dst), e.mult});
    if (unsent.contains(e.dst)) edges.push_back({g.name(e.src), primed_name(e.dst), e.mult});
  }

  QuotientGraph out{Graph(names, edges), {}, {}};
  for (const auto& name : out.graph.names()) {
    const bool is_primed = !g.find(name).has_value();
    out.primed.push_back(is_primed);
    out.origin.push_back(g.id(is_primed ? std::string_view(name).substr(0, name.size() - 1) : std::string_view(name)));
  }
  return out;
}

GradedLattice::GradedLattice(Graph g) : graph_(std::move(g)) {
  hs_sets_ = hereditary_saturated_sets(graph_);
  for (VertexSet h : hs_sets_) {
    hs_breaking_.push_back(breaking_vertices(graph_, h));
    for (VertexSet s : subsets_of(hs_breaking_.back())) pairs_.push_back({h, s});
  }
  std::sort(pairs_.begin(), pairs_.end(), pair_less);
  exitless_.reserve(pairs_.size());
  for (const auto& p : pairs_) exitless_.push_back(compute_quotient_exitless(p));
}

bool GradedLattice::contains(const AdmissiblePair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p, pair_less);
}

std::size_t GradedLattice::index_of(const AdmissiblePair& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p, pair_less);
  if (it == pairs_.end() || *it != p) throw ValidationError("not an admissible pair of this graph");
  return static_cast<std::size_t>(it - pairs_.begin());
}

VertexSet GradedLattice::breaking(VertexSet h) const {
  auto it = std::lower_bound(hs_sets_.begin(), hs_sets_.end(), h, vertex_set_less);
  if (it == hs_sets_.end() || *it != h) throw PreconditionError("not a hereditary saturated set of this graph");
  return hs_breaking_[static_cast<std::size_t>(it - hs_sets_.begin())];
}

namespace {

/// Extremal element of `bounds` under `above(x, y)` ("y is above x" for
/// meets, the reverse for joins); throws if there is none.
template <class Above>
AdmissiblePair extremum(const std::vector<const AdmissiblePair*>& bounds, Above above, const char* what) {
  if (bounds.empty()) throw InternalError(std::string(what) + ": no common bound in the admissible-pair lattice");
  const AdmissiblePair* best = bounds.front();
  for (const auto* b : bounds)
    if (above(*best, *b)) best = b;
  for (const auto* b : bounds)
    if (!above(*b, *best)) throw InternalError(std::string(what) + ": bounds have no unique extremum");
  return *best;
}

}  // namespace

AdmissiblePair GradedLattice::meet(const AdmissiblePair& a, const AdmissiblePair& b) const {
  require(a);
  require(b);
  if (pair_leq(a, b)) return a;
  if (pair_leq(b, a)) return b;
  std::vector<const AdmissiblePair*> lower;
  for (const auto& q : pairs_)
    if (pair_leq(q, a) && pair_leq(q, b)) lower.push_back(&q);
  return extremum(lower, [](const AdmissiblePair& x, const AdmissiblePair& y) { return pair_leq(x, y); }, "meet");
}

AdmissiblePair GradedLattice::join(const AdmissiblePair& a, const AdmissiblePair& b) const {
  require(a);
  require(b);
  if (pair_leq(a, b)) return b;
  if (pair_leq(b, a)) return a;
  std::vector<const AdmissiblePair*> upper;
  for (const auto& q : pairs_)
    if (pair_leq(a, q) && pair_leq(b, q)) upper.push_back(&q);
  return extremum(upper, [](const AdmissiblePair& x, const AdmissiblePair& y) { return pair_leq(y, x); }, "join");
}

std::vector<Cycle> GradedLattice::compute_quotient_exitless(const AdmissiblePair& p) const {
  // In E\(H,S) a vertex outside H keeps its edges into E^0\H and gains a
  // primed copy of each edge into B_H\S. Exitless cycle vertices have
  // exactly one such edge, so the cycles are those of a successor map.
  const VertexSet unsent = breaking(p.H) - p.S;
  std::vector<std::optional<VertexId>> succ(graph_.vertex_count());
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    if (p.H.contains(v)) continue;
    OutMultiplicity out;
    std::optional<VertexId> only;
    for (const auto& e : graph_.out_edges(v)) {
      if (p.H.contains(e.dst)) continue;
      out.add(e.mult);
      if (unsent.contains(e.dst)) out.add(e.mult);
      only = e.dst;
    }
    if (out.is_one()) succ[v] = only;
  }
  return cycles_of_successor_map(succ);
}

const std::vector<Cycle>& GradedLattice::quotient_exitless_cycles(const AdmissiblePair& p) const {
  return exitless_[index_of(p)];
}

bool GradedLattice::exitless_in_quotient(const Cycle& c, const AdmissiblePair& p) const {
  const auto& cycles = quotient_exitless_cycles(p);
  return std::binary_search(cycles.begin(), cycles.end(), c);
}

std::vector<std::pair<std::size_t, std::size_t>> GradedLattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = pairs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !pair_leq(pairs_[i], pairs_[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && pair_leq(pairs_[i], pairs_[k]) && pair_leq(pairs_[k], pairs_[j])) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

AdmissiblePair pair_meet(const GradedLattice& lattice, const AdmissiblePair& a, const AdmissiblePair& b) {
  return lattice.meet(a, b);
}

AdmissiblePair pair_join(const GradedLattice& lattice, const AdmissiblePair& a, const AdmissiblePair& b) {
  return lattice.join(a, b);
}

}  // namespace lpa
