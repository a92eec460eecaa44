#include "lpa/ideal.hpp"

#include <algorithm>

namespace lpa {

PathAlgebra::PathAlgebra(Graph g, FieldSpec field) : field_(field), lattice_(std::move(g)) {}

AlgebraPtr make_algebra(Graph g, FieldSpec field) { return std::make_shared<const PathAlgebra>(std::move(g), field); }

namespace {

void require_same_algebra(const Ideal& a, const Ideal& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw PreconditionError("ideals belong to different algebras");
}

int compare_sets(VertexSet a, VertexSet b) {
  if (a == b) return 0;
  return vertex_set_less(a, b) ? -1 : 1;
}

}  // namespace

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_algebra(a, b);
  return a.pair_ == b.pair_ && a.components_ == b.components_;
}

bool operator<(const Ideal& a, const Ideal& b) {
  if (int c = compare_sets(a.pair_.H, b.pair_.H)) return c < 0;
  if (int c = compare_sets(a.pair_.S, b.pair_.S)) return c < 0;
  return a.components_ < b.components_;
}

Ideal canonicalize(const AlgebraPtr& alg, AdmissiblePair pair, const ComponentMap& raw) {
  if (!alg) throw PreconditionError("canonicalize: no algebra");
  const auto& g = alg->graph();
  const auto& lattice = alg->lattice();
  lattice.require(pair);

  ComponentMap comps;
  for (const auto& [c, f] : raw) {
    if (c != Cycle::from_chain(g, c.vertices())) throw ValidationError("cycle is not in canonical rotation");
    if (f.field() != alg->field())
      throw PreconditionError("polynomial over F_" + std::to_string(f.field().p()) + " in an algebra over F_" +
                              std::to_string(alg->field().p()));
    if (f.is_zero()) continue;
    comps.emplace(c, laurent_normalize(f));
  }

  // Each absorption strictly enlarges H, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(comps, [&](const auto& kv) { return kv.first.vertex_set().subset_of(pair.H); });
    for (auto it = comps.begin(); it != comps.end(); ++it) {
      if (!it->second.is_one()) continue;
      const AdmissiblePair absorbed{hereditary_saturated_closure(g, it->first.vertex_set()), {}};
      pair = lattice.join(pair, absorbed);
      comps.erase(it);
      changed = true;
      break;
    }
  }

  for (const auto& [c, f] : comps)
    if (!lattice.exitless_in_quotient(c, pair))
      throw PreconditionError("cycle " + cycle_to_string(g, c) + " has an exit in the quotient graph by " +
                              to_string(alg, pair) + "; not a canonical component");
  return Ideal(alg, pair, std::move(comps));
}

Ideal zero_ideal(const AlgebraPtr& alg) { return canonicalize(alg, {}, {}); }

Ideal whole_ideal(const AlgebraPtr& alg) { return canonicalize(alg, alg->lattice().top(), {}); }

Ideal graded_ideal(const AlgebraPtr& alg, const AdmissiblePair& pair) { return canonicalize(alg, pair, {}); }

Ideal vertex_ideal(const AlgebraPtr& alg, VertexSet vertices) {
  return canonicalize(alg, {hereditary_saturated_closure(alg->graph(), vertices), {}}, {});
}

Ideal cycle_ideal(const AlgebraPtr& alg, const Cycle& c, const FieldPoly& f) { return canonicalize(alg, {}, {{c, f}}); }

Ideal gr(const Ideal& a) { return canonicalize(a.algebra_ptr(), a.pair(), {}); }

bool leq(const Ideal& a, const Ideal& b) {
  require_same_algebra(a, b);
  if (!pair_leq(a.pair(), b.pair())) return false;
  for (const auto& [c, f] : a.components()) {
    if (c.vertex_set().subset_of(b.pair().H)) continue;
    auto it = b.components().find(c);
    if (it == b.components().end() || !divides(it->second, f)) return false;
  }
  return true;
}

bool equals(const Ideal& a, const Ideal& b) { return a == b; }

Ideal add(const Ideal& a, const Ideal& b) {
  require_same_algebra(a, b);
  const AdmissiblePair pair = a.algebra().lattice().join(a.pair(), b.pair());
  ComponentMap comps = a.components();
  for (const auto& [c, g] : b.components()) {
    auto [it, inserted] = comps.emplace(c, g);
    if (!inserted) it->second = gcd(it->second, g);
  }
  return canonicalize(a.algebra_ptr(), pair, comps);
}

namespace {

/// Shared component table of mul and meet. A component on a cycle lying in
/// the other side's H is contained in that side's graded part and passes
/// through unchanged; a component facing neither a matching component nor
/// the graded part is annihilated.
template <class Combine>
Ideal product_like(const Ideal& a, const Ideal& b, Combine combine) {
  require_same_algebra(a, b);
  const AdmissiblePair pair = a.algebra().lattice().meet(a.pair(), b.pair());
  ComponentMap comps;
  for (const auto& [c, f] : a.components()) {
    if (auto it = b.components().find(c); it != b.components().end()) comps.emplace(c, combine(f, it->second));
    else if (c.vertex_set().subset_of(b.pair().H)) comps.emplace(c, f);
  }
  for (const auto& [c, g] : b.components())
    if (!a.components().contains(c) && c.vertex_set().subset_of(a.pair().H)) comps.emplace(c, g);
  return canonicalize(a.algebra_ptr(), pair, comps);
}

}  // namespace

Ideal mul(const Ideal& a, const Ideal& b) {
  return product_like(a, b, [](const FieldPoly& f, const FieldPoly& g) { return f * g; });
}

Ideal meet(const Ideal& a, const Ideal& b) {
  return product_like(a, b, [](const FieldPoly& f, const FieldPoly& g) { return lcm(f, g); });
}

Ideal radical(const Ideal& a) {
  ComponentMap comps;
  for (const auto& [c, f] : a.components()) comps.emplace(c, squarefree_part(f));
  return canonicalize(a.algebra_ptr(), a.pair(), comps);
}

Ideal power(const Ideal& a, unsigned n) {
  if (n == 0) throw PreconditionError("ideal power requires an exponent >= 1");
  Ideal out = a;
  for (unsigned k = 1; k < n; ++k) out = mul(out, a);
  return out;
}

bool IdealOpReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

IdealOpReport run_op(const std::string& op, const Ideal& a, const Ideal& b) {
  const auto start = std::chrono::steady_clock::now();
  Ideal out = op == "add"    ? add(a, b)
              : op == "mul"  ? mul(a, b)
              : op == "meet" ? meet(a, b)
                             : throw PreconditionError("unknown ideal operation '" + op + "'");
  const auto elapsed = std::chrono::steady_clock::now() - start;
  IdealOpReport report{op, {a, b}, out, {}, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
  report.checks.emplace_back("canonical", canonicalize(out.algebra_ptr(), out.pair(), out.components()) == out);
  if (op == "mul") {
    report.checks.emplace_back("product <= meet", leq(out, meet(a, b)));
    report.checks.emplace_back("commutative", mul(b, a) == out);
  } else {
    report.checks.emplace_back("commutative", (op == "add" ? add(b, a) : meet(b, a)) == out);
  }
  return report;
}

namespace {

std::string set_to_string(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  });
  return out + "}";
}

}  // namespace

std::string to_string(const AlgebraPtr& alg, const AdmissiblePair& p) {
  return "I(" + set_to_string(alg->graph(), p.H) + "," + set_to_string(alg->graph(), p.S) + ")";
}

std::string cycle_to_string(const Graph& g, const Cycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    if (i > 0) out += ">";
    out += g.name(c.vertices()[i]);
  }
  return out + ")";
}

std::string to_string(const Ideal& a) {
  std::string out = to_string(a.algebra_ptr(), a.pair());
  for (const auto& [c, f] : a.components()) out += " + <" + to_string(f) + ">" + cycle_to_string(a.algebra().graph(), c);
  return out;
}

}  // namespace lpa
