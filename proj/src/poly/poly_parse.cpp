#include <cctype>

#include "lpa/field_poly.hpp"

namespace lpa {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, FieldSpec field) : text_(text), field_(field) {}

  FieldPoly parse() {
    FieldPoly out = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\": " + what, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  FieldPoly sum() {
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    FieldPoly acc = term();
    if (negate) acc = FieldPoly(field_) - acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_++] == '-';
      FieldPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  FieldPoly term() {
    FieldPoly acc = power();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  FieldPoly power() {
    FieldPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::uint64_t e = integer(/*reduce=*/false);
      if (e > 100000) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  FieldPoly primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return FieldPoly::x(field_);
    }
    if (c == '(') {
      ++pos_;
      FieldPoly inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return FieldPoly::constant(field_, static_cast<std::uint32_t>(integer(/*reduce=*/true)));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::uint64_t integer(bool reduce) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (reduce) v %= field_.p();
      else if (v > 1000000000ULL) fail("integer too large");
    }
    return v;
  }

  std::string_view text_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldPoly parse_poly(std::string_view text, FieldSpec field) { return PolyParser(text, field).parse(); }

}  // namespace lpa
