#include "homzero/padic.hpp"

#include <algorithm>

#include "homzero/errors.hpp"
#include "homzero/poly_mod_p.hpp"

namespace homzero::padic {

namespace {

void require_prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw degenerate_input("modulus must be prime");
}

}  // namespace

long ord_p(const Rational& x, long p) {
  require_prime(p);
  if (x == 0) throw degenerate_input("the valuation of zero is undefined");
  const Integer pz(p);
  Integer scratch;
  // mpq_class is canonical, so at most one of the two counts is nonzero.
  long num = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
  long den = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
  return num - den;
}

NewtonPolygon newton_polygon(const poly::PolyRat& f, long p) {
  require_prime(p);
  if (f.is_zero()) throw degenerate_input("newton polygon of the zero polynomial");
  std::vector<std::pair<int, long>> points;
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) != 0) points.emplace_back(i, ord_p(f.coeff(i), p));

  NewtonPolygon np;
  np.p = p;
  for (const auto& pt : points) {
    while (np.vertices.size() >= 2) {
      const auto& a = np.vertices[np.vertices.size() - 2];
      const auto& b = np.vertices.back();
      const long long cross = static_cast<long long>(b.first - a.first) * (pt.second - a.second) -
                              static_cast<long long>(b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        np.vertices.pop_back();
      else
        break;
    }
    np.vertices.push_back(pt);
  }
  for (std::size_t k = 1; k < np.vertices.size(); ++k) {
    const auto& a = np.vertices[k - 1];
    const auto& b = np.vertices[k];
    Rational slope(b.second - a.second, b.first - a.first);
    slope.canonicalize();
    np.segments.push_back({slope, b.first - a.first});
  }
  return np;
}

std::string to_string(RamificationKind k) {
  switch (k) {
    case RamificationKind::Unramified: return "unramified";
    case RamificationKind::UpperBoundTwo: return "ramification index at most 2";
    case RamificationKind::LowerBound: return "ramification index divisible by a bound";
    case RamificationKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

RamificationEvidence ramification_evidence(const poly::PolyRat& f, long p) {
  require_prime(p);
  if (f.degree() < 1) throw degenerate_input("ramification evidence requires a nonconstant polynomial");

  bool reducible = p < (long{1} << 31);
  if (reducible)
    for (int i = 0; i <= f.degree() && reducible; ++i)
      if (f.coeff(i) != 0 && ord_p(f.coeff(i), p) < 0) reducible = false;
  if (reducible && ord_p(f.leading(), p) == 0) {
    poly::PolyModP fbar = poly::reduce_mod_p(f, p);
    if (poly::is_squarefree(fbar))
      return {p, RamificationKind::Unramified, 0, "squarefree mod " + std::to_string(p)};
    if (fbar.degree() >= 3) {
      poly::MultipleRootShape shape = poly::multiple_root_shape(fbar);
      if (shape.kind == poly::MultipleRootShape::Kind::DoubleRoot)
        return {p, RamificationKind::UpperBoundTwo, 2,
                "factors mod " + std::to_string(p) + " as (x - " + std::to_string(shape.c) +
                    ")^2 * w with w squarefree and w(" + std::to_string(shape.c) + ") != 0"};
    }
  }

  NewtonPolygon np = newton_polygon(f, p);
  Integer best(1);
  Rational best_slope;
  for (const SlopeSegment& seg : np.segments)
    if (seg.slope.get_den() > best) {
      best = seg.slope.get_den();
      best_slope = seg.slope;
    }
  if (best > 1) {
    if (best > 1000000) throw resource_limit("slope denominator does not fit the evidence record");
    return {p, RamificationKind::LowerBound, static_cast<int>(best.get_si()),
            "polygon slope " + best_slope.get_str() + " forces a ramification index divisible by " +
                best.get_str()};
  }
  return {p, RamificationKind::Inconclusive, 0,
          "no squarefree or double-root certificate mod " + std::to_string(p) +
              " and every polygon slope is integral"};
}

FieldsComparison fields_nonisomorphic_evidence(const poly::PolyRat& f, const poly::PolyRat& h,
                                               int prime_budget) {
  if (f.degree() < 1 || h.degree() < 1)
    throw degenerate_input("field comparison requires nonconstant polynomials");
  if (f.degree() != h.degree())
    throw degenerate_input("field comparison requires equal degrees");
  if (prime_budget < 0) throw degenerate_input("prime budget must be nonnegative");

  auto wild = [](const RamificationEvidence& e) {
    return e.kind == RamificationKind::LowerBound && e.bound > 2;
  };
  auto tame = [](const RamificationEvidence& e) {
    return e.kind == RamificationKind::Unramified || e.kind == RamificationKind::UpperBoundTwo;
  };

  FieldsComparison out;
  for (std::uint64_t p : first_primes(static_cast<std::size_t>(prime_budget))) {
    RamificationEvidence ef = ramification_evidence(f, static_cast<long>(p));
    RamificationEvidence eh = ramification_evidence(h, static_cast<long>(p));
    if ((wild(ef) && tame(eh)) || (wild(eh) && tame(ef))) {
      out.nonisomorphic = true;
      out.witness_prime = static_cast<long>(p);
      out.f_evidence = ef;
      out.h_evidence = eh;
      const RamificationEvidence& lo = wild(ef) ? eh : ef;
      const RamificationEvidence& hi = wild(ef) ? ef : eh;
      out.detail = "at p = " + std::to_string(p) + ": one field has a prime with ramification index divisible by " +
                   std::to_string(hi.bound) + " while the other is " + to_string(lo.kind);
      return out;
    }
  }
  out.detail = "no witness prime among the first " + std::to_string(prime_budget) + " primes";
  return out;
}

long bertrand_prime(long g) {
  if (g < 1) throw degenerate_input("bertrand window requires g >= 1");
  for (long p = g + 1; p <= 2 * g + 1; ++p)
    if (is_prime(static_cast<std::uint64_t>(p))) return p;
  throw std::logic_error("empty Bertrand window");
}

}  // namespace homzero::padic
