#pragma once

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "lpa/ideal.hpp"

namespace lpa {

/// Ideal-expression syntax tree.
///
///   statement := sum [("<=" | "==") sum]
///   sum       := product ("+" product)*
///   product   := meet ("*" meet)*
///   meet      := atom ("&" atom)*
///   atom      := "I(" names ";" names ")" | "gen(" names ")"
///              | "comp(" [label ":"] name (">" name)* ";" poly ")"
///              | "L" | "0" | "gr(" sum ")" | "rad(" sum ")" | "(" sum ")"
///
/// Names are identifiers or double-quoted strings. A sum is canonicalized
/// once over all its terms, so `gen(v) + comp(v1; x+1)` is valid when the
/// loop at v1 has no exit after v is removed.
struct ExprNode {
  enum class Kind { Pair, Gen, Comp, Whole, Zero, Sum, Product, Meet, Graded, Radical };

  Kind kind;
  std::size_t pos = 0;  // 0-based offset of the node's first character
  VertexSet first;      // Pair: H; Gen: generators
  VertexSet second;     // Pair: S
  std::vector<VertexId> chain;  // Comp
  FieldPoly poly;               // Comp
  std::vector<std::unique_ptr<ExprNode>> args;
};

struct Statement {
  enum class Compare { None, Leq, Eq };
  std::unique_ptr<ExprNode> lhs;
  Compare compare = Compare::None;
  std::unique_ptr<ExprNode> rhs;
};

/// Syntax errors and unknown vertices or cycles are ParseError with column
/// (line 1).
Statement parse_statement(const AlgebraPtr& alg, std::string_view text);

/// Ideal for a plain expression, bool for a comparison.
std::variant<Ideal, bool> evaluate(const AlgebraPtr& alg, const Statement& s);
Ideal evaluate(const AlgebraPtr& alg, const ExprNode& e);

std::variant<Ideal, bool> evaluate_text(const AlgebraPtr& alg, std::string_view text);
/// Throws ParseError if the text is a comparison.
Ideal evaluate_ideal(const AlgebraPtr& alg, std::string_view text);

}  // namespace lpa
