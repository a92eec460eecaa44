#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

/// The prime field F_p, 2 <= p < 2^31.
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultPrime = 5;

  FieldSpec() : p_(kDefaultPrime) {}
  /// Throws ValidationError unless p is prime and below 2^31.
  explicit FieldSpec(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t a) const {
    auto r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative inverse of a nonzero element.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

/// Dense univariate polynomial over F_p, coefficients low degree first, no
/// trailing zeros. The zero polynomial has an empty coefficient list.
class FieldPoly {
 public:
  explicit FieldPoly(FieldSpec field = FieldSpec{}) : field_(field) {}
  /// Coefficients are reduced mod p.
  FieldPoly(FieldSpec field, const std::vector<std::int64_t>& coeffs_low_first);

  static FieldPoly constant(FieldSpec field, std::uint32_t c);
  static FieldPoly x(FieldSpec field);
  /// c * x^k
  static FieldPoly monomial(FieldSpec field, std::uint32_t c, std::size_t k);

  FieldSpec field() const { return field_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return leading() == 1; }
  /// Monic, degree >= 1, nonzero constant term.
  bool is_laurent_normalized() const { return degree() >= 1 && is_monic() && coeffs_[0] != 0; }

  std::uint32_t eval(std::uint32_t at) const;
  FieldPoly derivative() const;
  FieldPoly monic() const;

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  FieldPoly scaled(std::uint32_t c) const;

  friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  /// Degree first, then coefficients from the leading term down.
  friend std::strong_ordering operator<=>(const FieldPoly& a, const FieldPoly& b);

 private:
  void trim();
  FieldSpec field_;
  std::vector<std::uint32_t> coeffs_;
};

/// Quotient and remainder; throws PreconditionError on a zero divisor.
std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator/(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator%(const FieldPoly& a, const FieldPoly& b);
bool divides(const FieldPoly& d, const FieldPoly& f);
FieldPoly pow(const FieldPoly& f, unsigned n);
FieldPoly powmod(const FieldPoly& f, std::uint64_t e, const FieldPoly& m);

/// Divides out the largest power of x and scales monic. Result is
/// Laurent-normalized or the constant 1 (for a monomial). Zero is an error.
FieldPoly laurent_normalize(const FieldPoly& f);

/// Monic gcd. Both zero is an error.
FieldPoly gcd(const FieldPoly& f, const FieldPoly& g);
/// Monic lcm of two nonzero polynomials.
FieldPoly lcm(const FieldPoly& f, const FieldPoly& g);

struct FactorPower {
  FieldPoly factor;
  unsigned multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Complete factorization of a Laurent-normalized polynomial into monic
/// irreducibles with multiplicity: squarefree decomposition, distinct-degree
/// split, then equal-degree splitting driven by a fixed-seed generator.
/// Factors are sorted.
std::vector<FactorPower> factor(const FieldPoly& f);
bool is_irreducible(const FieldPoly& f);
/// Product of the distinct irreducible factors.
FieldPoly squarefree_part(const FieldPoly& f);
/// Every monic divisor of f (including 1 and f), sorted.
std::vector<FieldPoly> monic_divisors(const FieldPoly& f);

/// Text form such as "x^2+3x+2".
std::string to_string(const FieldPoly& f);
/// Parses sums, products (explicit `*` or juxtaposition), integer powers and
/// parentheses over the single variable x, e.g. "(x+1)^2(x+2)" or "3*x^3-x".
/// Coefficients are reduced mod p.
FieldPoly parse_poly(std::string_view text, FieldSpec field);

}  // namespace lpa
