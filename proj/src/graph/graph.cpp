#include "lpa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lpa {

Graph::Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges) {
  if (vertices.size() > kMaxVertices)
    throw ValidationError("graph has " + std::to_string(vertices.size()) + " vertices; at most " +
                          std::to_string(kMaxVertices) + " are supported");
  for (const auto& v : vertices)
    if (v.empty()) throw ValidationError("vertex identifiers must be nonempty");
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end())
    throw ValidationError("duplicate vertex identifier '" + *dup + "'");
  names_ = std::move(vertices);

  edges_.reserve(edges.size());
  for (const auto& e : edges) edges_.push_back(Edge{id(e.src), id(e.dst), e.mult});
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].src == edges_[i - 1].src && edges_[i].dst == edges_[i - 1].dst)
      throw ValidationError("duplicate edge record " + names_[edges_[i].src] + " -> " + names_[edges_[i].dst] +
                            " (parallel edges are expressed by multiplicity)");

  const std::size_t n = names_.size();
  out_offset_.assign(n + 1, 0);
  for (const auto& e : edges_) ++out_offset_[e.src + 1];
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());

  // Reachability by iterated closure over the adjacency masks.
  std::vector<VertexSet> adj(n);
  for (const auto& e : edges_) adj[e.src].insert(e.dst);
  reach_.assign(n, VertexSet{});
  for (VertexId v = 0; v < n; ++v) {
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](VertexId u) { next |= adj[u]; });
      frontier = next - seen;
      seen |= next;
    }
    reach_[v] = seen;
  }
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ValidationError("unknown vertex '" + std::string(name) + "'");
}

VertexSet Graph::ids(const std::vector<std::string>& names) const {
  VertexSet out;
  for (const auto& n : names) out.insert(id(n));
  return out;
}

std::vector<std::string> Graph::names_of(VertexSet set) const {
  std::vector<std::string> out;
  set.for_each([&](VertexId v) { out.push_back(names_.at(v)); });
  return out;
}

std::span<const Edge> Graph::out_edges(VertexId v) const {
  if (v >= names_.size()) throw ValidationError("vertex id out of range");
  return std::span<const Edge>(edges_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]);
}

std::optional<Multiplicity> Graph::edge_between(VertexId u, VertexId v) const {
  for (const auto& e : out_edges(u))
    if (e.dst == v) return e.mult;
  return std::nullopt;
}

OutMultiplicity Graph::out_multiplicity(VertexId v) const {
  OutMultiplicity total;
  for (const auto& e : out_edges(v)) total.add(e.mult);
  return total;
}

VertexKind Graph::kind(VertexId v) const {
  const auto total = out_multiplicity(v);
  if (total.infinite) return VertexKind::InfiniteEmitter;
  return total.finite == 0 ? VertexKind::Sink : VertexKind::Regular;
}

VertexSet Graph::reachable_from(VertexSet from) const {
  VertexSet out;
  from.for_each([&](VertexId v) { out |= reach_.at(v); });
  return out;
}

bool Graph::same_edges(const Graph& a, const Graph& b) {
  return std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                    [](const Edge& x, const Edge& y) { return x.src == y.src && x.dst == y.dst && x.mult == y.mult; });
}

Cycle Cycle::from_chain(const Graph& g, std::vector<VertexId> chain) {
  if (chain.empty()) throw ValidationError("a cycle needs at least one vertex");
  VertexSet seen;
  for (VertexId v : chain) {
    if (v >= g.vertex_count()) throw ValidationError("cycle vertex id out of range");
    if (seen.contains(v)) throw ValidationError("cycle passes through vertex '" + g.name(v) + "' twice");
    seen.insert(v);
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const VertexId from = chain[i];
    const VertexId to = chain[(i + 1) % chain.size()];
    if (!g.edge_between(from, to))
      throw ValidationError("no edge " + g.name(from) + " -> " + g.name(to) + " for cycle");
  }
  std::rotate(chain.begin(), std::min_element(chain.begin(), chain.end()), chain.end());
  return Cycle(std::move(chain));
}

Cycle Cycle::from_names(const Graph& g, const std::vector<std::string>& chain) {
  std::vector<VertexId> ids;
  ids.reserve(chain.size());
  for (const auto& n : chain) ids.push_back(g.id(n));
  return from_chain(g, std::move(ids));
}

VertexSet Cycle::vertex_set() const {
  VertexSet s;
  for (VertexId v : vertices_) s.insert(v);
  return s;
}

VertexKind vertex_kind(const Graph& g, std::string_view v) { return g.kind(g.id(v)); }

bool reaches(const Graph& g, std::string_view u, std::string_view v) { return g.reaches(g.id(u), g.id(v)); }

std::vector<Cycle> simple_cycles(const Graph& g) {
  // Each cycle is found once, from its least vertex, exploring only larger ids.
  std::vector<Cycle> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<VertexId> path;
  VertexSet on_path;
  auto dfs = [&](auto&& self, VertexId start, VertexId v) -> void {
    for (const auto& e : g.out_edges(v)) {
      if (e.dst == start) {
        out.push_back(Cycle(path));
      } else if (e.dst > start && !on_path.contains(e.dst)) {
        path.push_back(e.dst);
        on_path.insert(e.dst);
        self(self, start, e.dst);
        on_path.erase(e.dst);
        path.pop_back();
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    on_path = VertexSet::single(s);
    dfs(dfs, s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> exitless_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (auto& c : simple_cycles(g)) {
    bool exitless = std::all_of(c.vertices().begin(), c.vertices().end(),
                                [&](VertexId v) { return g.out_multiplicity(v).is_one(); });
    if (exitless) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cycle> cycles_of_successor_map(const std::vector<std::optional<VertexId>>& succ) {
  std::vector<Cycle> out;
  const std::size_t n = succ.size();
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    std::vector<VertexId> walk;
    std::optional<VertexId> v = static_cast<VertexId>(s);
    while (v && *v < n && state[*v] == 0) {
      state[*v] = 1;
      walk.push_back(*v);
      v = succ[*v];
    }
    if (v && *v < n && state[*v] == 1) {
      auto it = std::find(walk.begin(), walk.end(), *v);
      std::vector<VertexId> cyc(it, walk.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      out.push_back(Cycle(std::move(cyc)));
    }
    for (VertexId w : walk) state[w] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool downward_directed(const Graph& g, VertexSet d) {
  if (!d.subset_of(g.all_vertices())) throw ValidationError("vertex set is not contained in the graph");
  const auto members = d.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!(g.reachable_from(members[i]) & g.reachable_from(members[j])).intersects(d)) return false;
  return true;
}

bool downward_directed(const Graph& g, const std::vector<std::string>& d) { return downward_directed(g, g.ids(d)); }

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  for (const auto& v : g.names()) os << "  " << dot_quote(v) << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << dot_quote(g.name(e.src)) << " -> " << dot_quote(g.name(e.dst));
    if (e.mult.is_omega()) os << " [label=\"ω\"]";
    else if (e.mult.count() > 1) os << " [label=\"" << e.mult.count() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Sink: return "sink";
    case VertexKind::Regular: return "regular";
    case VertexKind::InfiniteEmitter: return "infinite-emitter";
  }
  return "?";
}

}  // namespace lpa
