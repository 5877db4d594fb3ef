#include "homzero/poly_rat.hpp"

#include <algorithm>
#include <sstream>

#include "homzero/errors.hpp"

namespace homzero::poly {

namespace {

void prune(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Determinant of an integer matrix by Bareiss fraction-free elimination.
// Division at each step is exact; row swaps only flip the sign.
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return Integer(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Sylvester-matrix resultant of two integer coefficient vectors (ascending,
// pruned, both nonzero, deg >= 0).
Integer sylvester_resultant(const std::vector<Integer>& f,
                            const std::vector<Integer>& g) {
  const int n = static_cast<int>(f.size()) - 1;
  const int m = static_cast<int>(g.size()) - 1;
  if (n == 0 && m == 0) return Integer(1);
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), m);
    return r;
  }
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), n);
    return r;
  }
  const int dim = n + m;
  std::vector<std::vector<Integer>> s(dim, std::vector<Integer>(dim, Integer(0)));
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) s[row][row + j] = f[n - j];
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s[m + row][row + j] = g[m - j];
  return bareiss_det(std::move(s));
}

}  // namespace

PolyRat::PolyRat(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  prune(coeffs_);
}

PolyRat PolyRat::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return PolyRat(std::move(c));
}

PolyRat PolyRat::monomial(int degree, const Rational& coeff) {
  if (coeff == 0) return PolyRat();
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return PolyRat(std::move(c));
}

const Rational& PolyRat::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[i];
}

const Rational& PolyRat::leading() const {
  if (is_zero()) throw degenerate_input("leading coefficient of zero polynomial");
  return coeffs_.back();
}

PolyRat PolyRat::operator+(const PolyRat& rhs) const {
  std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
  return PolyRat(std::move(c));
}

PolyRat PolyRat::operator-(const PolyRat& rhs) const { return *this + (-rhs); }

PolyRat PolyRat::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return PolyRat(std::move(c));
}

PolyRat PolyRat::operator*(const PolyRat& rhs) const {
  if (is_zero() || rhs.is_zero()) return PolyRat();
  std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return PolyRat(std::move(c));
}

PolyRat PolyRat::scaled(const Rational& c) const {
  if (c == 0) return PolyRat();
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return PolyRat(std::move(out));
}

PolyRat PolyRat::derivative() const {
  if (coeffs_.size() <= 1) return PolyRat();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return PolyRat(std::move(c));
}

Rational PolyRat::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

PolyRat PolyRat::monic() const {
  if (is_zero()) throw degenerate_input("monic() of zero polynomial");
  return scaled(Rational(1) / leading());
}

std::pair<PolyRat, PolyRat> PolyRat::divmod(const PolyRat& g) const {
  if (g.is_zero()) throw degenerate_input("division by zero polynomial");
  PolyRat r = *this;
  if (r.degree() < g.degree()) return {PolyRat(), r};
  std::vector<Rational> q(r.degree() - g.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    Rational c = r.leading() / g.leading();
    q[shift] = c;
    r = r - g.scaled(c) * monomial(shift, Rational(1));
  }
  return {PolyRat(std::move(q)), r};
}

std::pair<std::vector<Integer>, Integer> PolyRat::integral_form() const {
  Integer den(1);
  for (const auto& c : coeffs_) {
    Integer d;
    mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = d;
  }
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Rational v = c * Rational(den);
    out.push_back(v.get_num());
  }
  return {std::move(out), den};
}

PolyRat gcd(const PolyRat& f, const PolyRat& g) {
  PolyRat a = f, b = g;
  while (!b.is_zero()) {
    PolyRat r = a.divmod(b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Rational resultant(const PolyRat& f, const PolyRat& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  auto [fi, fd] = f.integral_form();
  auto [gi, gd] = g.integral_form();
  Integer res = sylvester_resultant(fi, gi);
  // Res is homogeneous of degree deg(g) in f's coefficients and deg(f) in
  // g's, so clearing denominators rescales by fd^deg(g) * gd^deg(f).
  Integer scale_f, scale_g;
  mpz_pow_ui(scale_f.get_mpz_t(), fd.get_mpz_t(), g.degree());
  mpz_pow_ui(scale_g.get_mpz_t(), gd.get_mpz_t(), f.degree());
  Rational out(res);
  out /= Rational(scale_f * scale_g);
  mpq_canonicalize(out.get_mpq_t());
  return out;
}

Rational discriminant(const PolyRat& f) {
  const int n = f.degree();
  if (n < 1) throw degenerate_input("discriminant requires degree >= 1");
  if (n == 1) return Rational(1);
  Rational res = resultant(f, f.derivative());
  Rational d = res / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  mpq_canonicalize(d.get_mpq_t());
  return d;
}

bool is_squarefree(const PolyRat& f) {
  if (f.degree() < 1) throw degenerate_input("is_squarefree requires degree >= 1");
  return gcd(f, f.derivative()).degree() == 0;
}

long genus_of_curve(long n) {
  if (n < 3) throw degenerate_input("genus_of_curve requires n >= 3");
  return (n % 2 != 0) ? (n - 1) / 2 : (n - 2) / 2;
}

std::string to_string(const PolyRat& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (i == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace homzero::poly
