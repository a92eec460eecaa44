#pragma once

#include <chrono>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field_poly.hpp"
#include "lpa/graded_lattice.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A graph, a coefficient field and the enumerated lattice of admissible
/// pairs. Every Ideal points at the algebra it lives in.
class PathAlgebra {
 public:
  PathAlgebra(Graph g, FieldSpec field);

  const Graph& graph() const { return lattice_.graph(); }
  FieldSpec field() const { return field_; }
  const GradedLattice& lattice() const { return lattice_; }

 private:
  FieldSpec field_;
  GradedLattice lattice_;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

AlgebraPtr make_algebra(Graph g, FieldSpec field = FieldSpec{});

using ComponentMap = std::map<Cycle, FieldPoly>;

/// Canonical form I(H,S) + sum of <f_c(c)>: an admissible pair and, for some
/// cycles without exits in the quotient graph by that pair, a
/// Laurent-normalized polynomial of degree >= 1.
class Ideal {
 public:
  const PathAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const AdmissiblePair& pair() const { return pair_; }
  const ComponentMap& components() const { return components_; }

  bool is_graded() const { return components_.empty(); }
  bool is_zero() const { return pair_ == AdmissiblePair{} && components_.empty(); }
  bool is_whole() const { return pair_.H == algebra_->graph().all_vertices(); }
  bool is_proper() const { return !is_whole(); }

  /// Same algebra object required.
  friend bool operator==(const Ideal& a, const Ideal& b);
  /// Deterministic presentation order: pair first, then components.
  friend bool operator<(const Ideal& a, const Ideal& b);

 private:
  Ideal(AlgebraPtr alg, AdmissiblePair pair, ComponentMap components)
      : algebra_(std::move(alg)), pair_(pair), components_(std::move(components)) {}
  friend Ideal canonicalize(const AlgebraPtr& alg, AdmissiblePair pair, const ComponentMap& raw);

  AlgebraPtr algebra_;
  AdmissiblePair pair_;
  ComponentMap components_;
};

/// Brings (pair, raw components) to canonical form. Polynomials are
/// Laurent-normalized (a zero polynomial contributes nothing); components on
/// cycles inside H are dropped; a unit polynomial puts the cycle's vertices
/// into the ideal, enlarging the pair, and the process restarts. Throws
/// PreconditionError if a surviving cycle has an exit in the final quotient
/// graph, ValidationError if the pair is not admissible or a cycle is not a
/// cycle of the graph.
Ideal canonicalize(const AlgebraPtr& alg, AdmissiblePair pair, const ComponentMap& raw);

Ideal zero_ideal(const AlgebraPtr& alg);
Ideal whole_ideal(const AlgebraPtr& alg);
Ideal graded_ideal(const AlgebraPtr& alg, const AdmissiblePair& pair);
/// Ideal generated by a set of vertices: I(saturate(hereditary_closure(V)), {}).
Ideal vertex_ideal(const AlgebraPtr& alg, VertexSet vertices);
/// <f(c)> on its own.
Ideal cycle_ideal(const AlgebraPtr& alg, const Cycle& c, const FieldPoly& f);

Ideal gr(const Ideal& a);
bool leq(const Ideal& a, const Ideal& b);
bool equals(const Ideal& a, const Ideal& b);
Ideal add(const Ideal& a, const Ideal& b);
Ideal mul(const Ideal& a, const Ideal& b);
Ideal meet(const Ideal& a, const Ideal& b);
Ideal radical(const Ideal& a);
/// a^n for n >= 1.
Ideal power(const Ideal& a, unsigned n);

inline Ideal operator+(const Ideal& a, const Ideal& b) { return add(a, b); }
inline Ideal operator*(const Ideal& a, const Ideal& b) { return mul(a, b); }
inline Ideal operator&(const Ideal& a, const Ideal& b) { return meet(a, b); }

/// One binary operation with its inputs, result, the law checks run on it
/// and the time it took.
struct IdealOpReport {
  std::string op;
  std::vector<Ideal> inputs;
  Ideal output;
  std::vector<std::pair<std::string, bool>> checks;
  std::chrono::nanoseconds elapsed{};

  bool all_checks_pass() const;
};

/// op is one of "add", "mul", "meet". Checks: output canonical (re-running
/// canonicalize is a no-op); for mul additionally product <= meet and
/// commutativity.
IdealOpReport run_op(const std::string& op, const Ideal& a, const Ideal& b);

std::string to_string(const AlgebraPtr& alg, const AdmissiblePair& p);
/// e.g. "I({v},{}) + <x+1>(v)"
std::string to_string(const Ideal& a);
std::string cycle_to_string(const Graph& g, const Cycle& c);

}  // namespace lpa
