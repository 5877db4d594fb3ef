#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homzero/numeric.hpp"
#include "homzero/poly_rat.hpp"

namespace homzero::padic {

// Exponent of p in x, normalized so ord_p(p) = 1. Pre: x != 0, p prime.
long ord_p(const Rational& x, long p);

struct SlopeSegment {
  Rational slope;  // lowest terms
  int length = 0;  // horizontal extent
  bool operator==(const SlopeSegment&) const = default;
};

// Lower convex hull of {(i, ord_p(a_i)) : a_i != 0}. Vertices have strictly
// increasing abscissa, segments strictly increasing slope; colinear interior
// points are dropped.
struct NewtonPolygon {
  long p = 0;
  std::vector<std::pair<int, long>> vertices;
  std::vector<SlopeSegment> segments;
};

// Pre: f != 0, p prime.
NewtonPolygon newton_polygon(const poly::PolyRat& f, long p);

enum class RamificationKind { Unramified, UpperBoundTwo, LowerBound, Inconclusive };

std::string to_string(RamificationKind k);

// What the mod-p reduction or the Newton polygon proves about ramification
// of primes above p in Q[x]/(f), for irreducible f:
//   Unramified     f mod p squarefree: every ramification index is 1
//   UpperBoundTwo  f mod p = (x-c)^2 w, w squarefree, w(c) != 0: every
//                  ramification index is at most 2
//   LowerBound     some polygon slope has denominator `bound` >= 2: some
//                  prime above p has ramification index divisible by `bound`
//   Inconclusive   none of the above routes produced a certificate
struct RamificationEvidence {
  long p = 0;
  RamificationKind kind = RamificationKind::Inconclusive;
  int bound = 0;  // meaningful for LowerBound (the divisor) and UpperBoundTwo (= 2)
  std::string detail;
};

// Pre: p prime; f nonconstant and irreducible over Q (irreducibility is the
// caller's responsibility). Rational coefficients are handled natively: when
// f cannot be reduced mod p, the polygon route still applies.
RamificationEvidence ramification_evidence(const poly::PolyRat& f, long p);

struct FieldsComparison {
  bool nonisomorphic = false;
  long witness_prime = 0;
  std::optional<RamificationEvidence> f_evidence;  // at the witness prime
  std::optional<RamificationEvidence> h_evidence;
  std::string detail;
};

// Scans the first `prime_budget` primes for a p where one side has a proved
// ramification index > 2 while the other side is proved to have every index
// at most 2; such a p shows Q[x]/(f) and Q[x]/(h) are non-isomorphic. Both
// inputs must be irreducible (asserted by the caller) and of equal degree.
// Never claims a result without the verified witness pair.
FieldsComparison fields_nonisomorphic_evidence(const poly::PolyRat& f, const poly::PolyRat& h,
                                               int prime_budget);

// Smallest prime in [g+1, 2g+1]; the window is nonempty by Bertrand's
// postulate. Pre: g >= 1.
long bertrand_prime(long g);

}  // namespace homzero::padic
