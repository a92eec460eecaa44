#pragma once

#include <cstdint>
#include <random>

#include "lpa/ideal.hpp"

namespace lpa {

using Rng = std::mt19937_64;

/// Independent stream for one (seed, index) pair, so results do not depend
/// on the order in which trials run.
Rng split_rng(std::uint64_t seed, std::uint64_t index);

/// Random graph on 1..max_vertices vertices named v0, v1, ...: forward (DAG)
/// edges, loops, a few omega edges and occasional back edges closing short
/// cycles.
Graph random_graph(Rng& rng, std::size_t max_vertices = 8);

/// Uniform monic irreducible of the given degree (>= 1), nonzero constant.
FieldPoly random_irreducible(FieldSpec field, unsigned degree, Rng& rng);
/// Product of random irreducible factors (repeats allowed), total degree
/// between 1 and max_degree.
FieldPoly random_component_poly(FieldSpec field, Rng& rng, unsigned max_degree = 4);

/// Random pair, random subset of the quotient's exitless cycles, random
/// component polynomials.
Ideal random_ideal(const AlgebraPtr& alg, Rng& rng);

}  // namespace lpa
