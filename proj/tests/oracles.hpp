#pragma once

// Brute-force reference implementations used by the tests. They share no code
// with the library beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "lpa/graph.hpp"

namespace oracle {

using Coeffs = std::vector<std::int64_t>;  // low degree first, trimmed

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b)
    if (mod(a * b, p) == 1) return b;
  return 0;
}

inline Coeffs multiply(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  trim(out);
  return out;
}

inline Coeffs remainder(Coeffs a, const Coeffs& b, std::int64_t p) {
  const std::int64_t inv = inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t q = mod(a.back() * inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = mod(a[shift + k] - q * b[k], p);
    trim(a);
  }
  return a;
}

/// Every monic polynomial of exactly the given degree.
inline std::vector<Coeffs> monics(int degree, std::int64_t p) {
  std::vector<Coeffs> out;
  Coeffs c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  while (true) {
    out.push_back(c);
    std::size_t k = 0;
    while (k < static_cast<std::size_t>(degree) && ++c[k] == p) c[k++] = 0;
    if (k == static_cast<std::size_t>(degree)) break;
  }
  return out;
}

/// Irreducible iff no monic divisor of degree 1..deg/2.
inline bool irreducible_by_trial_division(const Coeffs& f, std::int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d)
    for (const auto& g : monics(d, p))
      if (remainder(f, g, p).empty()) return false;
  return true;
}

inline bool has_root(const Coeffs& f, std::int64_t p) {
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod(acc * x + *it, p);
    if (acc == 0) return true;
  }
  return false;
}

/// Reachability by Floyd-Warshall on the edge list (reflexive).
inline std::vector<std::vector<bool>> reachability(const lpa::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const auto& e : g.edges()) r[e.src][e.dst] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline bool hereditary(const lpa::Graph& g, std::uint64_t set) {
  for (const auto& e : g.edges())
    if ((set >> e.src & 1) && !(set >> e.dst & 1)) return false;
  return true;
}

inline bool saturated(const lpa::Graph& g, std::uint64_t set) {
  for (lpa::VertexId v = 0; v < g.vertex_count(); ++v) {
    if (set >> v & 1) continue;
    bool has_edge = false, infinite = false, all_inside = true;
    for (const auto& e : g.edges()) {
      if (e.src != v) continue;
      has_edge = true;
      if (e.mult.is_omega()) infinite = true;
      if (!(set >> e.dst & 1)) all_inside = false;
    }
    if (has_edge && !infinite && all_inside) return false;
  }
  return true;
}

/// Every subset passing both predicates.
inline std::set<std::uint64_t> hereditary_saturated_subsets(const lpa::Graph& g) {
  std::set<std::uint64_t> out;
  const std::uint64_t n = g.vertex_count();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (hereditary(g, s) && saturated(g, s)) out.insert(s);
  return out;
}

/// Infinite emitters outside h with 1..finite edges to vertices outside h.
inline std::uint64_t breaking(const lpa::Graph& g, std::uint64_t h) {
  std::uint64_t out = 0;
  for (lpa::VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h >> v & 1) continue;
    bool infinite = false, infinite_outside = false;
    std::uint64_t outside = 0;
    for (const auto& e : g.edges()) {
      if (e.src != v) continue;
      if (e.mult.is_omega()) infinite = true;
      if (h >> e.dst & 1) continue;
      if (e.mult.is_omega()) infinite_outside = true;
      else outside += e.mult.count();
    }
    if (infinite && !infinite_outside && outside > 0) out |= std::uint64_t{1} << v;
  }
  return out;
}

/// Simple cycles by trying every ordering of every vertex subset, rotated to
/// start at the least id.
inline std::set<std::vector<lpa::VertexId>> simple_cycles(const lpa::Graph& g) {
  std::set<std::vector<lpa::VertexId>> out;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<lpa::VertexId> vs;
    for (lpa::VertexId v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    do {
      if (vs.front() != *std::min_element(vs.begin(), vs.end())) continue;
      bool ok = true;
      for (std::size_t k = 0; k < vs.size() && ok; ++k) ok = g.edge_between(vs[k], vs[(k + 1) % vs.size()]).has_value();
      if (ok) out.insert(vs);
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return out;
}

}  // namespace oracle
