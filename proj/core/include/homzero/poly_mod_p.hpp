#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homzero/poly_rat.hpp"

namespace homzero::poly {

/// degree -> number of monic irreducible factors of that degree
using DegreeMultiset = std::map<int, int>;

/// Univariate polynomial over the prime field F_p.
///
/// Residues live in [0, p); coefficients ascending with no trailing zeros.
/// The modulus must be prime and below 2^31 so products fit comfortably in
/// 64-bit intermediates.
class PolyModP {
 public:
  PolyModP(std::int64_t p, std::vector<std::int64_t> coeffs);

  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const;
  std::int64_t leading() const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  PolyModP operator+(const PolyModP& rhs) const;
  PolyModP operator-(const PolyModP& rhs) const;
  PolyModP operator*(const PolyModP& rhs) const;
  bool operator==(const PolyModP& rhs) const = default;

  PolyModP derivative() const;
  std::int64_t eval(std::int64_t x) const;
  PolyModP monic() const;
  std::pair<PolyModP, PolyModP> divmod(const PolyModP& g) const;

  static PolyModP zero(std::int64_t p) { return PolyModP(p, {}); }
  static PolyModP from_x(std::int64_t p);

 private:
  std::int64_t p_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Reduction of a rational polynomial mod p. Rejects p dividing any
/// coefficient denominator.
PolyModP reduce_mod_p(const PolyRat& f, std::int64_t p);

PolyModP gcd(const PolyModP& f, const PolyModP& g);

/// True iff gcd(f, f') is constant. A vanishing derivative (f in F_p[x^p])
/// means f is a p-th power, hence not squarefree. Pre: deg(f) >= 1.
bool is_squarefree(const PolyModP& f);

/// Distinct-degree factorization degree counts via repeated squaring of
/// x^p mod f. No equal-degree splitting is performed; the counts alone are
/// the product of this module. Pre: f squarefree, deg(f) >= 1.
DegreeMultiset ddf_degrees(const PolyModP& f);

/// Multiplicity pattern classification used by the ramification analysis.
struct MultipleRootShape {
  enum class Kind { Squarefree, DoubleRoot, Other };
  Kind kind = Kind::Other;
  /// DoubleRoot only: f = (x-c)^2 * w with w squarefree and w(c) != 0.
  std::int64_t c = 0;
  std::optional<PolyModP> w;
};

/// Pre: deg(f) >= 3.
MultipleRootShape multiple_root_shape(const PolyModP& f);

/// Resultant over F_p (Sylvester determinant by Gaussian elimination).
std::int64_t resultant(const PolyModP& f, const PolyModP& g);
/// Discriminant over F_p; 0 iff f has a multiple root. Pre: deg(f) >= 1.
std::int64_t discriminant(const PolyModP& f);

std::string to_string(const PolyModP& f);

}  // namespace homzero::poly
