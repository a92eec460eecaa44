#include "lpa/expr.hpp"

#include <cctype>

namespace lpa {

namespace {

using Node = std::unique_ptr<ExprNode>;

class ExprParser {
 public:
  ExprParser(const AlgebraPtr& alg, std::string_view text) : alg_(alg), text_(text) {}

  Statement parse() {
    Statement s;
    s.lhs = sum();
    skip_space();
    if (accept("<=")) s.compare = Statement::Compare::Leq;
    else if (accept("==")) s.compare = Statement::Compare::Eq;
    if (s.compare != Statement::Compare::None) s.rhs = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, 1, at + 1); }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  }

  /// Keyword immediately followed by '(' (after optional spaces).
  bool accept_call(std::string_view keyword) {
    skip_space();
    const std::size_t save = pos_;
    if (text_.substr(pos_, keyword.size()) != keyword) return false;
    pos_ += keyword.size();
    if (pos_ < text_.size() && ident_char(text_[pos_])) {
      pos_ = save;
      return false;
    }
    if (accept("(")) return true;
    pos_ = save;
    return false;
  }

  Node make(ExprNode::Kind kind, std::size_t at) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->pos = at;
    n->poly = FieldPoly(alg_->field());
    return n;
  }

  Node binary_chain(ExprNode::Kind kind, char op, Node (ExprParser::*next)()) {
    skip_space();
    const std::size_t at = pos_;
    Node first = (this->*next)();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != op) return first;
    Node out = make(kind, at);
    out->args.push_back(std::move(first));
    while (true) {
      skip_space();
      // "<=" and "==" are comparisons, never a chain operator.
      if (pos_ >= text_.size() || text_[pos_] != op) break;
      ++pos_;
      out->args.push_back((this->*next)());
    }
    return out;
  }

  Node sum() { return binary_chain(ExprNode::Kind::Sum, '+', &ExprParser::product); }
  Node product() { return binary_chain(ExprNode::Kind::Product, '*', &ExprParser::meet); }
  Node meet() { return binary_chain(ExprNode::Kind::Meet, '&', &ExprParser::atom); }

  std::string name() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '"') {
      const std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated quoted name");
      std::string out(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return out;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a vertex name");
    return std::string(text_.substr(start, pos_ - start));
  }

  VertexId vertex() {
    skip_space();
    const std::size_t at = pos_;
    const std::string n = name();
    const auto id = alg_->graph().find(n);
    if (!id) fail("unknown vertex '" + n + "'", at);
    return *id;
  }

  /// Comma-separated names up to (not including) one of the stop characters.
  VertexSet names_until(std::string_view stops) {
    VertexSet out;
    skip_space();
    if (pos_ < text_.size() && stops.find(text_[pos_]) != std::string_view::npos) return out;
    do out.insert(vertex());
    while (accept(","));
    return out;
  }

  Node atom() {
    skip_space();
    const std::size_t at = pos_;
    if (accept_call("I")) {
      Node n = make(ExprNode::Kind::Pair, at);
      n->first = names_until(";");
      expect(";");
      n->second = names_until(")");
      expect(")");
      return n;
    }
    if (accept_call("gen")) {
      Node n = make(ExprNode::Kind::Gen, at);
      n->first = names_until(")");
      expect(")");
      return n;
    }
    if (accept_call("comp")) return comp(at);
    if (accept_call("gr") || accept_call("rad")) {
      Node n = make(text_[at] == 'g' ? ExprNode::Kind::Graded : ExprNode::Kind::Radical, at);
      n->args.push_back(sum());
      expect(")");
      return n;
    }
    if (accept("(")) {
      Node n = sum();
      expect(")");
      return n;
    }
    if (pos_ < text_.size() && text_[pos_] == 'L' && (pos_ + 1 == text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return make(ExprNode::Kind::Whole, at);
    }
    if (pos_ < text_.size() && text_[pos_] == '0' && (pos_ + 1 == text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return make(ExprNode::Kind::Zero, at);
    }
    fail(pos_ == text_.size() ? "unexpected end of expression" : "expected an ideal");
  }

  Node comp(std::size_t at) {
    Node n = make(ExprNode::Kind::Comp, at);
    // Optional "label:" before the vertex chain.
    const std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '"') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (pos_ == start || !accept(":")) pos_ = save;
    } else {
      pos_ = save;
    }

    skip_space();
    const std::size_t chain_at = pos_;
    do n->chain.push_back(vertex());
    while (accept(">"));
    try {
      (void)Cycle::from_chain(alg_->graph(), n->chain);
    } catch (const ValidationError& e) {
      fail(e.what(), chain_at);
    }
    expect(";");

    skip_space();
    const std::size_t poly_at = pos_;
    int depth = 0;
    while (pos_ < text_.size() && !(depth == 0 && text_[pos_] == ')')) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      ++pos_;
    }
    if (pos_ == text_.size()) fail("expected ')' after the polynomial");
    try {
      n->poly = parse_poly(text_.substr(poly_at, pos_ - poly_at), alg_->field());
    } catch (const ParseError& e) {
      fail(e.detail(), poly_at + (e.column() > 0 ? e.column() - 1 : 0));
    }
    ++pos_;
    return n;
  }

  const AlgebraPtr& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct RawSum {
  AdmissiblePair pair;
  ComponentMap comps;
};

void merge(const AlgebraPtr& alg, RawSum& into, const AdmissiblePair& pair, const ComponentMap& comps) {
  into.pair = alg->lattice().join(into.pair, pair);
  for (const auto& [c, f] : comps) {
    if (f.is_zero()) continue;
    auto [it, inserted] = into.comps.emplace(c, f);
    if (!inserted) it->second = gcd(it->second, f);
  }
}

void collect(const AlgebraPtr& alg, const ExprNode& e, RawSum& into) {
  if (e.kind == ExprNode::Kind::Sum) {
    for (const auto& a : e.args) collect(alg, *a, into);
  } else if (e.kind == ExprNode::Kind::Comp) {
    merge(alg, into, {}, {{Cycle::from_chain(alg->graph(), e.chain), e.poly}});
  } else {
    const Ideal i = evaluate(alg, e);
    merge(alg, into, i.pair(), i.components());
  }
}

}  // namespace

Statement parse_statement(const AlgebraPtr& alg, std::string_view text) { return ExprParser(alg, text).parse(); }

Ideal evaluate(const AlgebraPtr& alg, const ExprNode& e) {
  using K = ExprNode::Kind;
  switch (e.kind) {
    case K::Pair: {
      const AdmissiblePair pair{e.first, e.second};
      if (!alg->lattice().contains(pair))
        throw PreconditionError("I(" + to_string(alg, pair).substr(2) + " is not an admissible pair");
      return graded_ideal(alg, pair);
    }
    case K::Gen: return vertex_ideal(alg, e.first);
    case K::Whole: return whole_ideal(alg);
    case K::Zero: return zero_ideal(alg);
    case K::Comp:
    case K::Sum: {
      RawSum raw;
      collect(alg, e, raw);
      return canonicalize(alg, raw.pair, raw.comps);
    }
    case K::Product:
    case K::Meet: {
      Ideal acc = evaluate(alg, *e.args.front());
      for (std::size_t k = 1; k < e.args.size(); ++k)
        acc = e.kind == K::Product ? mul(acc, evaluate(alg, *e.args[k])) : meet(acc, evaluate(alg, *e.args[k]));
      return acc;
    }
    case K::Graded: return gr(evaluate(alg, *e.args.front()));
    case K::Radical: return radical(evaluate(alg, *e.args.front()));
  }
  throw InternalError("unknown expression node");
}

std::variant<Ideal, bool> evaluate(const AlgebraPtr& alg, const Statement& s) {
  const Ideal lhs = evaluate(alg, *s.lhs);
  if (s.compare == Statement::Compare::None) return lhs;
  const Ideal rhs = evaluate(alg, *s.rhs);
  return s.compare == Statement::Compare::Leq ? leq(lhs, rhs) : equals(lhs, rhs);
}

std::variant<Ideal, bool> evaluate_text(const AlgebraPtr& alg, std::string_view text) {
  return evaluate(alg, parse_statement(alg, text));
}

Ideal evaluate_ideal(const AlgebraPtr& alg, std::string_view text) {
  const Statement s = parse_statement(alg, text);
  if (s.compare != Statement::Compare::None) throw ParseError("expected an ideal expression, not a comparison", 1, 1);
  return evaluate(alg, *s.lhs);
}

}  // namespace lpa
