#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homzero/numeric.hpp"

namespace homzero::poly {

/// Univariate polynomial over ℚ.
///
/// Coefficients are stored ascending (index i holds the coefficient of x^i)
/// with no trailing zeros; the zero polynomial is the empty sequence and has
/// degree -1. Instances are immutable value types.
class PolyRat {
 public:
  PolyRat() = default;
  explicit PolyRat(std::vector<Rational> coeffs);

  static PolyRat from_integers(const std::vector<long>& coeffs);
  static PolyRat monomial(int degree, const Rational& coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PolyRat operator+(const PolyRat& rhs) const;
  PolyRat operator-(const PolyRat& rhs) const;
  PolyRat operator*(const PolyRat& rhs) const;
  PolyRat operator-() const;
  PolyRat scaled(const Rational& c) const;
  bool operator==(const PolyRat& rhs) const = default;

  PolyRat derivative() const;
  Rational eval(const Rational& x) const;
  /// Leading coefficient scaled to 1. Pre: nonzero.
  PolyRat monic() const;

  /// Euclidean division: f = q*g + r with deg r < deg g. Pre: g nonzero.
  std::pair<PolyRat, PolyRat> divmod(const PolyRat& g) const;

  /// Smallest positive d with d*f integral, together with those integer
  /// coefficients: f = (1/d) * F.
  std::pair<std::vector<Integer>, Integer> integral_form() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both arguments are zero).
PolyRat gcd(const PolyRat& f, const PolyRat& g);

/// Resultant of f and g; 0 if either is zero. Computed as a fraction-free
/// Sylvester determinant (Bareiss elimination) on denominator-cleared
/// coefficients, rescaled exactly.
Rational resultant(const PolyRat& f, const PolyRat& g);

/// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f). Zero iff f has a multiple
/// root over the algebraic closure. Pre: deg(f) >= 1; constants and the zero
/// polynomial are rejected.
Rational discriminant(const PolyRat& f);

/// True iff gcd(f, f') is constant. Pre: deg(f) >= 1.
bool is_squarefree(const PolyRat& f);

/// Genus of the smooth projective hyperelliptic curve y² = f(x) for a
/// squarefree degree-n model: (n-1)/2 for odd n, (n-2)/2 for even n.
/// Pre: n >= 3.
long genus_of_curve(long n);

/// Canonical human-readable form, e.g. "x^5 - x - 1" or "x^3 + 1/2*x".
/// Parsing the result with the CLI polynomial grammar returns an equal value.
std::string to_string(const PolyRat& f);

}  // namespace homzero::poly
