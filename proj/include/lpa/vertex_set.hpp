#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

using VertexId = std::uint32_t;

/// Maximum number of vertices a Graph may hold (vertex sets are 64-bit masks).
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of a graph's vertex set, stored as a bit mask over vertex ids.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  /// Members in increasing id order.
  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<VertexId>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace lpa
