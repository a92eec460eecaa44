#include <algorithm>

#include "lpa/classify.hpp"

namespace lpa {

namespace {

/// Monic polynomials of degree 1..max_degree with nonzero constant term.
std::vector<FieldPoly> normalized_polys(FieldSpec field, unsigned max_degree) {
  std::vector<FieldPoly> out;
  const std::uint32_t p = field.p();
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 1;
    c[0] = 1;
    while (true) {
      out.emplace_back(field, c);
      std::size_t k = 0;
      // Odometer over c[0] in 1..p-1 and c[1..d-1] in 0..p-1.
      while (k < d) {
        const std::int64_t lo = k == 0 ? 1 : 0;
        if (++c[k] < static_cast<std::int64_t>(p)) break;
        c[k] = lo;
        ++k;
      }
      if (k == d) break;
    }
  }
  return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > static_cast<std::size_t>(-1) / a) return static_cast<std::size_t>(-1);
  return a * b;
}

/// Emits canonicalize(pair, choice) for every combination of per-cycle
/// options (nullopt = no component on that cycle).
void emit_combinations(const AlgebraPtr& alg, const AdmissiblePair& pair, const std::vector<Cycle>& cycles,
                       const std::vector<std::vector<std::optional<FieldPoly>>>& options, std::vector<Ideal>& out) {
  std::vector<std::size_t> idx(cycles.size(), 0);
  while (true) {
    ComponentMap comps;
    for (std::size_t k = 0; k < cycles.size(); ++k)
      if (const auto& f = options[k][idx[k]]) comps.emplace(cycles[k], *f);
    Ideal j = canonicalize(alg, pair, comps);
    if (j.pair() != pair || j.components().size() != comps.size())
      throw InternalError("enumerated component choice was not already canonical: " + to_string(j));
    out.push_back(std::move(j));
    std::size_t k = 0;
    while (k < cycles.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == cycles.size()) break;
  }
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const AlgebraPtr& alg, unsigned max_degree, std::size_t bound) {
  const auto polys = normalized_polys(alg->field(), max_degree);
  std::vector<std::optional<FieldPoly>> option_list{std::nullopt};
  option_list.insert(option_list.end(), polys.begin(), polys.end());

  std::size_t total = 0;
  for (const auto& pair : alg->lattice().pairs()) {
    std::size_t n = 1;
    for (std::size_t k = 0; k < alg->lattice().quotient_exitless_cycles(pair).size(); ++k)
      n = saturating_mul(n, option_list.size());
    total += n;
    if (total > bound) throw EnumerationLimit("ideal enumeration exceeds the bound of " + std::to_string(bound));
  }

  std::vector<Ideal> out;
  out.reserve(total);
  for (const auto& pair : alg->lattice().pairs()) {
    const auto& cycles = alg->lattice().quotient_exitless_cycles(pair);
    emit_combinations(alg, pair, cycles, std::vector(cycles.size(), option_list), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealEnumeration ideals_containing(const Ideal& i, const EnumerationOptions& opts) {
  if (i.is_zero() && opts.free_degree == 0)
    throw PreconditionError("ideals_containing: the zero ideal lies below infinitely many ideals whenever a "
                            "cycle without exits appears in a quotient; pass a nonzero ideal");
  const auto& alg = i.algebra_ptr();
  const auto& lattice = alg->lattice();

  std::vector<std::optional<FieldPoly>> free_options{std::nullopt};
  if (opts.free_degree > 0)
    for (auto& f : normalized_polys(alg->field(), opts.free_degree)) free_options.emplace_back(std::move(f));

  struct Plan {
    const AdmissiblePair* pair;
    std::vector<std::vector<std::optional<FieldPoly>>> options;
  };
  std::vector<Plan> plans;
  IdealEnumeration result;
  std::size_t total = 0;

  for (const auto& q : lattice.pairs()) {
    if (!pair_leq(i.pair(), q)) continue;
    const auto& cycles = lattice.quotient_exitless_cycles(q);
    bool feasible = true;
    for (const auto& [c, f] : i.components())
      if (!c.vertex_set().subset_of(q.H) && !std::binary_search(cycles.begin(), cycles.end(), c)) feasible = false;
    if (!feasible) continue;

    Plan plan{&q, {}};
    std::size_t n = 1;
    for (const auto& c : cycles) {
      std::vector<std::optional<FieldPoly>> opt;
      if (auto it = i.components().find(c); it != i.components().end()) {
        for (auto& d : monic_divisors(it->second))
          if (d.degree() >= 1) opt.emplace_back(std::move(d));
      } else {
        result.complete = false;
        opt = free_options;
      }
      n = saturating_mul(n, opt.size());
      plan.options.push_back(std::move(opt));
    }
    total += n;
    if (total > opts.bound)
      throw EnumerationLimit("ideals_containing: more than " + std::to_string(opts.bound) + " candidates");
    plans.push_back(std::move(plan));
  }

  for (const auto& plan : plans)
    emit_combinations(alg, *plan.pair, lattice.quotient_exitless_cycles(*plan.pair), plan.options, result.ideals);
  for (const auto& j : result.ideals)
    if (!leq(i, j)) throw InternalError("ideals_containing produced " + to_string(j) + ", which does not contain " + to_string(i));
  std::sort(result.ideals.begin(), result.ideals.end());
  return result;
}

bool irreducible_oracle(const Ideal& i, const EnumerationOptions& opts) {
  if (i.is_zero() || i.is_whole()) throw PreconditionError("irreducible_oracle expects a nonzero proper ideal");
  auto up = ideals_containing(i, opts).ideals;
  std::erase(up, i);
  const std::size_t n = up.size();
  if (n > 1 && n * (n - 1) / 2 > opts.bound)
    throw EnumerationLimit("irreducible_oracle: " + std::to_string(n) + " ideals above give too many pairs");
  const auto& lattice = i.algebra().lattice();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (lattice.meet(up[a].pair(), up[b].pair()) == i.pair() && meet(up[a], up[b]) == i) return false;
  return true;
}

Ideal radical_oracle(const Ideal& i, const EnumerationOptions& opts) {
  Ideal out = whole_ideal(i.algebra_ptr());
  for (const auto& j : ideals_containing(i, opts).ideals)
    if (is_prime(j).is_prime) out = meet(out, j);
  return out;
}

}  // namespace lpa
