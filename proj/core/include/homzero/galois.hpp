#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homzero/numeric.hpp"
#include "homzero/poly_rat.hpp"

namespace homzero::galois {

// Multiset of cycle lengths, ascending, summing to the degree.
using CycleType = std::vector<int>;

enum class IrreducibilityStatus { Irreducible, Reducible, Unknown };

struct IrreducibilityCertificate {
  IrreducibilityStatus status = IrreducibilityStatus::Unknown;
  // Irreducible via reduction: f stays irreducible mod this prime.
  std::optional<long> witness_prime;
  // Irreducible via the degree-set sieve: the factor-degree subset sums of
  // these primes intersect to {0, n}.
  std::vector<long> sieve_primes;
  std::optional<Rational> rational_root;  // Reducible route
  std::string detail;
};

// Sound three-way certificate. Irreducible fires when f is irreducible mod
// some good prime, when the degree-set sieve pins {0, n}, or when deg <= 3
// admits no rational root (exhaustive search). Reducible fires on a rational
// root. Everything else is Unknown. Pre: deg >= 2, squarefree.
IrreducibilityCertificate irreducibility_certificate(const poly::PolyRat& f, int prime_budget);

// True iff disc(f) is the square of a rational, i.e. Gal(f) lies in the
// alternating group. Pre: f squarefree.
bool disc_is_square(const poly::PolyRat& f);

// Frobenius cycle types at good primes (p dividing neither the leading
// coefficient nor the discriminant of the cleared form), ascending, one pair
// per good prime until `prime_budget` of them are collected. Pre: f
// squarefree, deg >= 1.
std::vector<std::pair<long, CycleType>> sample_cycle_types(const poly::PolyRat& f, int prime_budget);

// Cycle type of sigma^k for any permutation sigma of type t: each length-L
// cycle splits into gcd(L, k) cycles of length L / gcd(L, k).
CycleType power_type(const CycleType& t, long k);

// All distinct types of powers of an element of type t (= types at the
// divisors of the element order).
std::vector<CycleType> power_closure(const CycleType& t);

enum class GaloisStatus { SnProven, AnProven, ContainedInAn, Unknown };

std::string to_string(GaloisStatus s);

struct GaloisVerdict {
  GaloisStatus status = GaloisStatus::Unknown;
  std::vector<std::pair<long, CycleType>> witnesses;
  bool disc_square = false;
  std::vector<std::string> rules_fired;
};

// Proves Gal(f) = S_n or A_n when a sound rule chain completes, else reports
// ContainedInAn (square discriminant) or Unknown. Degree 3 is settled by
// irreducibility plus the discriminant, degree 4 by the cubic resolvent,
// degree >= 5 by Dedekind sampling with Jordan's criteria over power-closed
// cycle types. Pre: deg >= 3, squarefree.
GaloisVerdict identify_sn_an(const poly::PolyRat& f, int prime_budget = 100);

}  // namespace homzero::galois
