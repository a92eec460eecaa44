#include <algorithm>

#include "lpa/classify.hpp"

namespace lpa {

std::string to_string(PrimeCase c) {
  switch (c) {
    case PrimeCase::GradedCaseI: return "graded-i";
    case PrimeCase::GradedCaseII: return "graded-ii";
    case PrimeCase::NonGradedCaseIII: return "non-graded-iii";
    case PrimeCase::NotPrime: return "not-prime";
  }
  return "?";
}

namespace {

PrimalityVerdict not_prime(std::string why) { return {false, PrimeCase::NotPrime, std::move(why)}; }

/// First vertex outside h that does not reach target, if any.
std::optional<VertexId> non_reaching(const Graph& g, VertexSet outside, VertexId target) {
  for (VertexId v : outside.members())
    if (!g.reaches(v, target)) return v;
  return std::nullopt;
}

std::optional<std::pair<VertexId, VertexId>> undirected_pair(const Graph& g, VertexSet d) {
  const auto members = d.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!(g.reachable_from(members[i]) & g.reachable_from(members[j])).intersects(d))
        return std::pair{members[i], members[j]};
  return std::nullopt;
}

}  // namespace

PrimalityVerdict is_prime(const Ideal& i) {
  if (i.is_whole()) return not_prime("the whole ring is not a proper ideal");
  const auto& g = i.algebra().graph();
  const auto& [h, s] = i.pair();
  const VertexSet breaking = i.algebra().lattice().breaking(h);
  const VertexSet outside = g.all_vertices() - h;

  if (i.is_graded()) {
    if (s == breaking) {
      if (auto bad = undirected_pair(g, outside))
        return not_prime("E^0\\H is not downward directed: " + g.name(bad->first) + " and " + g.name(bad->second) +
                         " have no common vertex below them outside H");
      return {true, PrimeCase::GradedCaseI, {}};
    }
    const VertexSet missing = breaking - s;
    if (missing.size() != 1)
      return not_prime("S omits " + std::to_string(missing.size()) + " breaking vertices of H");
    const VertexId u = missing.members().front();
    if (auto v = non_reaching(g, outside, u))
      return not_prime("S = B_H\\{" + g.name(u) + "} but " + g.name(*v) + " does not reach " + g.name(u));
    return {true, PrimeCase::GradedCaseII, {}};
  }

  if (s != breaking) return not_prime("non-graded ideal with S different from B_H");
  if (i.components().size() != 1)
    return not_prime("non-graded ideal with " + std::to_string(i.components().size()) + " cycle components");
  const auto& [c, p] = *i.components().begin();
  if (!lpa::is_irreducible(p)) return not_prime("component polynomial " + to_string(p) + " is reducible");
  if (auto v = non_reaching(g, outside, c.base()))
    return not_prime(g.name(*v) + " does not reach the cycle " + cycle_to_string(g, c));
  return {true, PrimeCase::NonGradedCaseIII, {}};
}

std::optional<std::pair<Ideal, unsigned>> prime_power_decomposition(const Ideal& i) {
  if (i.is_whole()) return std::nullopt;
  if (i.is_graded()) {
    if (is_prime(i).is_prime) return std::pair{i, 1U};
    return std::nullopt;
  }
  if (i.components().size() != 1 || is_prime(gr(i)).kind != PrimeCase::GradedCaseI) return std::nullopt;
  const auto& [c, f] = *i.components().begin();
  const auto factors = factor(f);
  if (factors.size() != 1) return std::nullopt;
  const Ideal p = canonicalize(i.algebra_ptr(), i.pair(), {{c, factors.front().factor}});
  const unsigned n = factors.front().multiplicity;
  if (!is_prime(p).is_prime || power(p, n) != i) return std::nullopt;
  return std::pair{p, n};
}

bool is_primary(const Ideal& i) {
  if (i.is_whole()) throw PreconditionError("primary ideals are proper; got the whole ring");
  return prime_power_decomposition(i).has_value();
}

bool is_irreducible(const Ideal& i) {
  if (i.is_whole()) throw PreconditionError("irreducible ideals are proper; got the whole ring");
  return prime_power_decomposition(i).has_value();
}

std::vector<Ideal> graded_primes(const AlgebraPtr& alg) {
  std::vector<Ideal> out;
  for (const auto& p : alg->lattice().pairs()) {
    Ideal g = graded_ideal(alg, p);
    if (is_prime(g).is_prime) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> minimal_graded_primes_over(const Ideal& g) {
  if (!g.is_graded()) throw PreconditionError("minimal_graded_primes_over expects a graded ideal");
  if (g.is_whole()) throw PreconditionError("minimal_graded_primes_over expects a proper ideal");
  std::vector<Ideal> above;
  for (auto& p : graded_primes(g.algebra_ptr()))
    if (leq(g, p)) above.push_back(std::move(p));
  std::vector<Ideal> out;
  for (const auto& p : above) {
    const bool minimal = std::none_of(above.begin(), above.end(), [&](const Ideal& q) { return q != p && leq(q, p); });
    if (minimal) out.push_back(p);
  }
  return out;
}

}  // namespace lpa
