#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lpa/ideal.hpp"

namespace lpa {

enum class PrimeCase { GradedCaseI, GradedCaseII, NonGradedCaseIII, NotPrime };

struct PrimalityVerdict {
  bool is_prime = false;
  PrimeCase kind = PrimeCase::NotPrime;
  /// Failing condition when not prime; empty otherwise.
  std::string witness;
};

/// Primes come in three shapes: I(H,B_H) with E^0\H downward directed;
/// I(H,B_H\{u}) with every vertex outside H reaching u; I(H,B_H) + <p(c)>
/// with p irreducible and every vertex outside H reaching c. The whole ring
/// is never prime. (In the second shape u' is a sink of the quotient graph
/// by construction, so it is not tested.)
PrimalityVerdict is_prime(const Ideal& i);
std::string to_string(PrimeCase c);

/// (P, n) with I = P^n and P prime, or nothing. The whole ring has none.
std::optional<std::pair<Ideal, unsigned>> prime_power_decomposition(const Ideal& i);
/// Both are "I is a prime power"; they are kept apart so the fuzzer can check
/// each against its own oracle. Throw PreconditionError on the whole ring.
bool is_primary(const Ideal& i);
bool is_irreducible(const Ideal& i);

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

struct EnumerationOptions {
  /// Maximum number of candidates (ideals_containing) or of candidate pairs
  /// (irreducible_oracle) before EnumerationLimit is thrown.
  std::size_t bound = kDefaultEnumerationBound;
  /// Cycles of a quotient that carry no component of the input ("free"
  /// cycles) admit infinitely many polynomials. With free_degree = 0 they are
  /// only left without a component; otherwise every normalized polynomial of
  /// degree <= free_degree is tried as well.
  unsigned free_degree = 0;
};

struct IdealEnumeration {
  std::vector<Ideal> ideals;
  /// False when some free cycle was met, i.e. the true up-set is infinite
  /// and `ideals` is the restricted part described in EnumerationOptions.
  bool complete = true;
};

/// Canonical ideals J >= I: every admissible pair above I's pair, and on
/// each of its quotient's exitless cycles either a monic divisor (degree >= 1)
/// of I's polynomial on that cycle, or for free cycles, see
/// EnumerationOptions. Sorted. The zero ideal is rejected (PreconditionError)
/// unless free_degree > 0.
IdealEnumeration ideals_containing(const Ideal& i, const EnumerationOptions& opts = {});

/// Every canonical ideal whose component polynomials have degree <=
/// max_degree. Throws EnumerationLimit beyond opts.bound.
std::vector<Ideal> enumerate_ideals(const AlgebraPtr& alg, unsigned max_degree,
                                    std::size_t bound = kDefaultEnumerationBound);

/// Not a meet of two strictly larger ideals, decided by search over
/// ideals_containing(I). Restricting to components on cycles already
/// carrying one of I's components loses no witness: a split of I can always
/// be moved onto graded ideals or onto divisors of I's polynomials.
bool irreducible_oracle(const Ideal& i, const EnumerationOptions& opts = {});

/// Meet of every prime in ideals_containing(I). A prime above I carrying a
/// polynomial on a free cycle lies above the graded prime gr(P), which also
/// contains I, so leaving those out does not change the meet.
Ideal radical_oracle(const Ideal& i, const EnumerationOptions& opts = {});

/// All graded primes of the algebra, sorted.
std::vector<Ideal> graded_primes(const AlgebraPtr& alg);
/// Minimal elements among graded primes containing a proper graded ideal.
std::vector<Ideal> minimal_graded_primes_over(const Ideal& g);

struct PrimeFactorization {
  std::vector<Ideal> factors;
  bool verified = false;
};

struct FactorFailure {
  enum class Reason { GradedPartNotIntersectionOfMinimalPrimes, ComponentMatchingFailed };
  Reason reason;
  std::string details;
};

std::string to_string(FactorFailure::Reason r);

/// Writes a proper ideal as a product of primes: the minimal graded primes
/// over gr(I), with the one under each component replaced by its
/// non-graded primes for the irreducible factors of that component's
/// polynomial. Factors sorted; the product is recomputed and compared with I
/// (InternalError on mismatch).
std::variant<PrimeFactorization, FactorFailure> factor_into_primes(const Ideal& i);

/// C with B*C = A, for A <= B. PreconditionError if A is not inside B.
Ideal solve_quotient(const Ideal& a, const Ideal& b);

}  // namespace lpa
