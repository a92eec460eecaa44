#include "lpa/field_poly.hpp"

#include <algorithm>

namespace lpa {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime_u32(p))
    throw ValidationError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw PreconditionError("zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

FieldPoly::FieldPoly(FieldSpec field, const std::vector<std::int64_t>& coeffs_low_first) : field_(field) {
  coeffs_.reserve(coeffs_low_first.size());
  for (auto c : coeffs_low_first) coeffs_.push_back(field_.reduce(c));
  trim();
}

FieldPoly FieldPoly::constant(FieldSpec field, std::uint32_t c) { return monomial(field, c, 0); }

FieldPoly FieldPoly::x(FieldSpec field) { return monomial(field, 1, 1); }

FieldPoly FieldPoly::monomial(FieldSpec field, std::uint32_t c, std::size_t k) {
  FieldPoly out(field);
  c %= field.p();
  if (c == 0) return out;
  out.coeffs_.assign(k + 1, 0);
  out.coeffs_[k] = c;
  return out;
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint32_t FieldPoly::eval(std::uint32_t at) const {
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
  return acc;
}

FieldPoly FieldPoly::derivative() const {
  FieldPoly out(field_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.coeffs_[k - 1] = field_.mul(coeffs_[k], field_.reduce(static_cast<std::int64_t>(k)));
  out.trim();
  return out;
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FieldPoly FieldPoly::scaled(std::uint32_t c) const {
  FieldPoly out(field_);
  out.coeffs_.reserve(coeffs_.size());
  for (auto a : coeffs_) out.coeffs_.push_back(field_.mul(a, c));
  out.trim();
  return out;
}

namespace {

void require_same_field(const FieldPoly& a, const FieldPoly& b) {
  if (a.field() != b.field()) throw PreconditionError("polynomials over different fields");
}

}  // namespace

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  FieldPoly out(a.field_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = a.field_.add(a.coeff(k), b.coeff(k));
  out.trim();
  return out;
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  FieldPoly out(a.field_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = a.field_.sub(a.coeff(k), b.coeff(k));
  out.trim();
  return out;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  FieldPoly out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const auto& f = a.field_;
  const std::uint64_t p = f.p();
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
  }
  out.coeffs_.assign(acc.begin(), acc.end());
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const FieldPoly& a, const FieldPoly& b) {
  if (auto c = a.field_.p() <=> b.field_.p(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = a.coeffs_.size(); k-- > 0;)
    if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const auto f = a.field();
  std::vector<std::uint32_t> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::uint32_t lead_inv = f.inv(b.leading());
  if (rem.size() < d.size()) return {FieldPoly(f), a};
  const std::size_t shifts = rem.size() - d.size() + 1;
  std::vector<std::int64_t> quot(shifts, 0);
  for (std::size_t s = shifts; s-- > 0;) {
    const std::uint32_t q = f.mul(rem[s + d.size() - 1], lead_inv);
    quot[s] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[s + j] = f.sub(rem[s + j], f.mul(q, d[j]));
  }
  std::vector<std::int64_t> rem64(rem.begin(), rem.end());
  return {FieldPoly(f, quot), FieldPoly(f, rem64)};
}

FieldPoly operator/(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).first; }
FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).second; }

bool divides(const FieldPoly& d, const FieldPoly& f) { return (f % d).is_zero(); }

FieldPoly pow(const FieldPoly& f, unsigned n) {
  FieldPoly result = FieldPoly::constant(f.field(), 1);
  FieldPoly base = f;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

FieldPoly powmod(const FieldPoly& f, std::uint64_t e, const FieldPoly& m) {
  FieldPoly result = FieldPoly::constant(f.field(), 1) % m;
  FieldPoly base = f % m;
  while (e > 0) {
    if (e & 1U) result = (result * base) % m;
    e >>= 1U;
    if (e > 0) base = (base * base) % m;
  }
  return result;
}

FieldPoly laurent_normalize(const FieldPoly& f) {
  if (f.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  const auto& c = f.coeffs();
  const auto shift = static_cast<std::size_t>(std::find_if(c.begin(), c.end(), [](auto a) { return a != 0; }) - c.begin());
  std::vector<std::int64_t> stripped(c.begin() + static_cast<std::ptrdiff_t>(shift), c.end());
  return FieldPoly(f.field(), stripped).monic();
}

FieldPoly gcd(const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  FieldPoly a = f;
  FieldPoly b = g;
  while (!b.is_zero()) {
    FieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FieldPoly lcm(const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("lcm requires nonzero polynomials");
  return ((f * g) / gcd(f, g)).monic();
}

std::string to_string(const FieldPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const auto c = f.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += 'x';
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace lpa
