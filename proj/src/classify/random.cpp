#include "lpa/random.hpp"

#include <map>

namespace lpa {

Rng split_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Graph random_graph(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k));

  std::map<std::pair<std::size_t, std::size_t>, Multiplicity> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (chance(rng, 0.35)) edges.emplace(std::pair{i, i}, Multiplicity::finite(chance(rng, 0.1) ? 2 : 1));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (chance(rng, 0.08)) edges.emplace(std::pair{i, j}, Multiplicity::omega());
      else if (chance(rng, 0.3)) edges.emplace(std::pair{i, j}, Multiplicity::finite(chance(rng, 0.1) ? 2 : 1));
    }
  }
  if (n >= 2 && chance(rng, 0.4)) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(j > 2 ? j - 2 : 0, j - 1)(rng);
    edges.emplace(std::pair{j, i}, Multiplicity::finite(1));
  }

  std::vector<NamedEdge> named;
  for (const auto& [e, m] : edges) named.push_back({names[e.first], names[e.second], m});
  return Graph(names, named);
}

FieldPoly random_irreducible(FieldSpec field, unsigned degree, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, field.p() - 1);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, field.p() - 1);
  while (true) {
    std::vector<std::int64_t> c(degree + 1);
    c[0] = nonzero(rng);
    for (unsigned k = 1; k < degree; ++k) c[k] = coeff(rng);
    c[degree] = 1;
    FieldPoly f(field, c);
    if (is_irreducible(f)) return f;
  }
}

FieldPoly random_component_poly(FieldSpec field, Rng& rng, unsigned max_degree) {
  FieldPoly out = FieldPoly::constant(field, 1);
  FieldPoly last = out;
  std::uniform_int_distribution<unsigned> degree(1, std::min(2U, max_degree));
  do {
    if (!last.is_one() && chance(rng, 0.4)) {
      if (out.degree() + last.degree() > static_cast<int>(max_degree)) break;
      out = out * last;
      continue;
    }
    const unsigned d = degree(rng);
    if (out.degree() + static_cast<int>(d) > static_cast<int>(max_degree)) break;
    last = random_irreducible(field, d, rng);
    out = out * last;
  } while (chance(rng, 0.5));
  return out;
}

Ideal random_ideal(const AlgebraPtr& alg, Rng& rng) {
  const auto& pairs = alg->lattice().pairs();
  const auto& pair = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
  ComponentMap comps;
  for (const auto& c : alg->lattice().quotient_exitless_cycles(pair))
    if (chance(rng, 0.6)) comps.emplace(c, random_component_poly(alg->field(), rng));
  return canonicalize(alg, pair, comps);
}

}  // namespace lpa
