#include <algorithm>
#include <map>
#include <random>

#include "lpa/field_poly.hpp"

namespace lpa {

namespace {

constexpr std::uint64_t kSplitSeed = 0x9e3779b97f4a7c15ULL;

void require_normalized(const FieldPoly& f, const char* op) {
  if (!f.is_laurent_normalized())
    throw PreconditionError(std::string(op) + " requires a Laurent-normalized polynomial (monic, degree >= 1, "
                            "nonzero constant term); got " + to_string(f));
}

/// g with g(x)^p = f(x); valid when f' = 0 (Frobenius is the identity on F_p).
FieldPoly pth_root(const FieldPoly& f) {
  const std::uint32_t p = f.field().p();
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) out.push_back(f.coeffs()[k]);
  return FieldPoly(f.field(), out);
}

/// Musser's squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with multiplicities.
void squarefree_decompose(const FieldPoly& f, unsigned scale, std::vector<std::pair<FieldPoly, unsigned>>& out) {
  if (f.degree() < 1) return;
  const std::uint32_t p = f.field().p();
  const FieldPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), scale * p, out);
    return;
  }
  FieldPoly c = gcd(f, df);
  FieldPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FieldPoly y = gcd(w, c);
    FieldPoly z = w / y;
    if (!z.is_one()) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) squarefree_decompose(pth_root(c.monic()), scale * p, out);
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree: (product, degree).
std::vector<std::pair<FieldPoly, unsigned>> distinct_degree(const FieldPoly& f) {
  std::vector<std::pair<FieldPoly, unsigned>> out;
  const auto field = f.field();
  const FieldPoly x = FieldPoly::x(field);
  FieldPoly rest = f;
  FieldPoly h = x % rest;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, field.p(), rest);
    FieldPoly g = gcd(h - x, rest);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
  return out;
}

FieldPoly random_below(const FieldPoly& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, g.field().p() - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(g.degree()));
  for (auto& a : c) a = coeff(rng);
  return FieldPoly(g.field(), c);
}

/// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const FieldPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FieldPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const auto field = g.field();
  const std::uint32_t p = field.p();
  while (true) {
    FieldPoly a = random_below(g, rng);
    if (a.degree() < 1) continue;
    FieldPoly b(field);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      FieldPoly term = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      // a^((p^d-1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      FieldPoly frob = a;
      FieldPoly norm = a;
      for (unsigned i = 1; i < d; ++i) {
        frob = powmod(frob, p, g);
        norm = (norm * frob) % g;
      }
      b = powmod(norm, (p - 1) / 2, g) - FieldPoly::constant(field, 1);
    }
    if (b.is_zero()) continue;
    FieldPoly u = gcd(b, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(g / u, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FactorPower> factor(const FieldPoly& f) {
  require_normalized(f, "factor");
  std::vector<std::pair<FieldPoly, unsigned>> parts;
  squarefree_decompose(f, 1, parts);

  std::mt19937_64 rng(kSplitSeed);
  std::map<FieldPoly, unsigned> acc;
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<FieldPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& q : irreducibles) acc[q.monic()] += mult;
    }
  }
  std::vector<FactorPower> out;
  for (auto& [q, m] : acc) out.push_back(FactorPower{q, m});

  FieldPoly check = FieldPoly::constant(f.field(), 1);
  for (const auto& fp : out) check = check * pow(fp.factor, fp.multiplicity);
  if (check != f) throw InternalError("factorization of " + to_string(f) + " does not remultiply");
  return out;
}

bool is_irreducible(const FieldPoly& f) {
  const auto fs = factor(f);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

FieldPoly squarefree_part(const FieldPoly& f) {
  FieldPoly out = FieldPoly::constant(f.field(), 1);
  for (const auto& fp : factor(f)) out = out * fp.factor;
  return out;
}

std::vector<FieldPoly> monic_divisors(const FieldPoly& f) {
  std::vector<FieldPoly> out{FieldPoly::constant(f.field(), 1)};
  if (f.is_one()) return out;
  for (const auto& [q, m] : factor(f)) {
    std::vector<FieldPoly> next;
    for (const auto& d : out) {
      FieldPoly term = d;
      for (unsigned e = 0; e <= m; ++e) {
        next.push_back(term);
        term = term * q;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpa
