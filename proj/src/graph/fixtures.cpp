#include "lpa/fixtures.hpp"

namespace lpa {

namespace {

NamedEdge edge(const char* s, const char* d, std::uint32_t m = 1) { return {s, d, Multiplicity::finite(m)}; }
NamedEdge omega(const char* s, const char* d) { return {s, d, Multiplicity::omega()}; }

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  out.push_back({"G1", "one vertex v with a loop", Graph({"v"}, {edge("v", "v")})});
  out.push_back({"G2", "loop at u and an edge u->v", Graph({"u", "v"}, {edge("u", "u"), edge("u", "v")})});
  out.push_back({"G3", "sink v fed by v1 and v2, each carrying a loop",
                 Graph({"v", "v1", "v2"}, {edge("v1", "v"), edge("v2", "v"), edge("v1", "v1"), edge("v2", "v2")})});
  out.push_back({"G4", "infinite emitter w: omega edges to h, one edge to z",
                 Graph({"h", "w", "z"}, {omega("w", "h"), edge("w", "z")})});
  out.push_back({"G5", "2x2 grid, edges pointing right and up",
                 Graph({"p00", "p01", "p10", "p11"},
                       {edge("p00", "p10"), edge("p00", "p01"), edge("p10", "p11"), edge("p01", "p11")})});
  out.push_back({"G6", "loop at a and an isolated vertex h", Graph({"a", "h"}, {edge("a", "a")})});
  out.push_back({"G7", "infinite emitters w and u over h; cycle t<->u",
                 Graph({"h", "t", "u", "w"},
                       {omega("w", "h"), edge("w", "t"), edge("t", "u"), omega("u", "h"), edge("u", "t")})});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace lpa
