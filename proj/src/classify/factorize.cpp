#include <algorithm>

#include "lpa/classify.hpp"

namespace lpa {

std::string to_string(FactorFailure::Reason r) {
  switch (r) {
    case FactorFailure::Reason::GradedPartNotIntersectionOfMinimalPrimes:
      return "GradedPartNotIntersectionOfMinimalPrimes";
    case FactorFailure::Reason::ComponentMatchingFailed: return "ComponentMatchingFailed";
  }
  return "?";
}

namespace {

Ideal meet_all(const AlgebraPtr& alg, const std::vector<Ideal>& ideals, std::size_t skip = static_cast<std::size_t>(-1)) {
  Ideal out = whole_ideal(alg);
  for (std::size_t k = 0; k < ideals.size(); ++k)
    if (k != skip) out = meet(out, ideals[k]);
  return out;
}

std::string list_to_string(const std::vector<Ideal>& ideals) {
  std::string out = "[";
  for (std::size_t k = 0; k < ideals.size(); ++k) out += (k ? ", " : "") + to_string(ideals[k]);
  return out + "]";
}

}  // namespace

std::variant<PrimeFactorization, FactorFailure> factor_into_primes(const Ideal& i) {
  if (i.is_whole()) throw PreconditionError("factor_into_primes expects a proper ideal; got the whole ring");
  const auto& alg = i.algebra_ptr();
  const auto& g = alg->graph();
  const Ideal graded = gr(i);

  const auto minimal = minimal_graded_primes_over(graded);
  if (minimal.empty() || meet_all(alg, minimal) != graded)
    return FactorFailure{FactorFailure::Reason::GradedPartNotIntersectionOfMinimalPrimes,
                         "minimal graded primes " + list_to_string(minimal) + " do not meet to " + to_string(graded)};
  for (std::size_t k = 0; k < minimal.size(); ++k)
    if (meet_all(alg, minimal, k) == graded)
      return FactorFailure{FactorFailure::Reason::GradedPartNotIntersectionOfMinimalPrimes,
                           "intersection of " + list_to_string(minimal) + " is redundant at " + to_string(minimal[k])};

  std::vector<Ideal> factors;
  std::vector<bool> matched(minimal.size(), false);
  for (const auto& [c, f] : i.components()) {
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (!c.vertex_set().subset_of(minimal[k].pair().H)) hits.push_back(k);
    if (hits.size() != 1 || matched[hits.front()])
      return FactorFailure{FactorFailure::Reason::ComponentMatchingFailed,
                           "cycle " + cycle_to_string(g, c) + " lies outside " + std::to_string(hits.size()) +
                               " minimal graded primes" + (hits.size() == 1 ? " already matched to another cycle" : "")};
    const auto& p = minimal[hits.front()];
    matched[hits.front()] = true;
    const AdmissiblePair pair{p.pair().H, alg->lattice().breaking(p.pair().H)};
    for (const auto& [q, m] : factor(f))
      for (unsigned r = 0; r < m; ++r) factors.push_back(canonicalize(alg, pair, {{c, q}}));
  }
  for (std::size_t k = 0; k < minimal.size(); ++k)
    if (!matched[k]) factors.push_back(minimal[k]);
  std::sort(factors.begin(), factors.end());

  Ideal product = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) product = mul(product, factors[k]);
  if (product != i)
    throw InternalError("prime factors " + list_to_string(factors) + " multiply to " + to_string(product) +
                        ", not " + to_string(i));
  return PrimeFactorization{std::move(factors), true};
}

Ideal solve_quotient(const Ideal& a, const Ideal& b) {
  if (!leq(a, b)) throw PreconditionError("solve_quotient requires A <= B; " + to_string(a) + " is not inside " + to_string(b));
  if (a == b) return whole_ideal(a.algebra_ptr());
  if (leq(a, gr(b))) return a;

  ComponentMap comps;
  for (const auto& [c, f] : a.components()) {
    if (c.vertex_set().subset_of(b.pair().H)) {
      comps.emplace(c, f);
      continue;
    }
    const auto it = b.components().find(c);
    if (it == b.components().end()) throw InternalError("solve_quotient: B has no component on " + cycle_to_string(a.algebra().graph(), c));
    auto [q, r] = divmod(f, it->second);
    if (!r.is_zero()) throw InternalError("solve_quotient: component of B does not divide that of A");
    // A unit quotient puts the cycle's vertices into C.
    comps.emplace(c, q);
  }
  Ideal c = canonicalize(a.algebra_ptr(), a.pair(), comps);
  if (mul(b, c) != a) throw InternalError("solve_quotient: B*C = " + to_string(mul(b, c)) + " differs from A = " + to_string(a));
  return c;
}

}  // namespace lpa
