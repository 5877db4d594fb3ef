#include "homzero/poly_mod_p.hpp"

#include <sstream>

#include "homzero/errors.hpp"
#include "homzero/numeric.hpp"

namespace homzero::poly {

namespace {

constexpr std::int64_t kModulusCap = std::int64_t(1) << 31;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  return powmod(((a % p) + p) % p, p - 2, p);
}

void prune(std::vector<std::int64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

PolyModP::PolyModP(std::int64_t p, std::vector<std::int64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2 || p >= kModulusCap) throw degenerate_input("modulus out of range");
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw degenerate_input("modulus must be prime");
  for (auto& c : coeffs_) {
    c %= p_;
    if (c < 0) c += p_;
  }
  prune(coeffs_);
}

std::int64_t PolyModP::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

std::int64_t PolyModP::leading() const {
  if (is_zero()) throw degenerate_input("leading coefficient of zero polynomial");
  return coeffs_.back();
}

PolyModP PolyModP::from_x(std::int64_t p) { return PolyModP(p, {0, 1}); }

PolyModP PolyModP::operator+(const PolyModP& rhs) const {
  if (p_ != rhs.p_) throw degenerate_input("mixed moduli");
  std::vector<std::int64_t> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    c[i] = (c[i] + rhs.coeffs_[i]) % p_;
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::operator-(const PolyModP& rhs) const {
  if (p_ != rhs.p_) throw degenerate_input("mixed moduli");
  std::vector<std::int64_t> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    c[i] = ((c[i] - rhs.coeffs_[i]) % p_ + p_) % p_;
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::operator*(const PolyModP& rhs) const {
  if (p_ != rhs.p_) throw degenerate_input("mixed moduli");
  if (is_zero() || rhs.is_zero()) return zero(p_);
  std::vector<std::int64_t> c(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(coeffs_[i], rhs.coeffs_[j], p_)) % p_;
  }
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::derivative() const {
  if (coeffs_.size() <= 1) return zero(p_);
  std::vector<std::int64_t> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = mulmod(coeffs_[i], static_cast<std::int64_t>(i % p_), p_);
  return PolyModP(p_, std::move(c));
}

std::int64_t PolyModP::eval(std::int64_t x) const {
  x = ((x % p_) + p_) % p_;
  std::int64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = (mulmod(acc, x, p_) + coeffs_[i]) % p_;
  return acc;
}

PolyModP PolyModP::monic() const {
  if (is_zero()) throw degenerate_input("monic() of zero polynomial");
  if (leading() == 1) return *this;
  std::int64_t inv = invmod(leading(), p_);
  std::vector<std::int64_t> c = coeffs_;
  for (auto& v : c) v = mulmod(v, inv, p_);
  return PolyModP(p_, std::move(c));
}

std::pair<PolyModP, PolyModP> PolyModP::divmod(const PolyModP& g) const {
  if (g.is_zero()) throw degenerate_input("division by zero polynomial");
  if (p_ != g.p_) throw degenerate_input("mixed moduli");
  std::vector<std::int64_t> r = coeffs_;
  if (degree() < g.degree()) return {zero(p_), *this};
  std::vector<std::int64_t> q(degree() - g.degree() + 1, 0);
  const std::int64_t inv = invmod(g.leading(), p_);
  for (int i = degree(); i >= g.degree(); --i) {
    std::int64_t lead = r[i];
    if (lead == 0) continue;
    std::int64_t c = mulmod(lead, inv, p_);
    q[i - g.degree()] = c;
    for (int j = 0; j <= g.degree(); ++j) {
      auto& slot = r[i - g.degree() + j];
      slot = ((slot - mulmod(c, g.coeffs_[j], p_)) % p_ + p_) % p_;
    }
  }
  return {PolyModP(p_, std::move(q)), PolyModP(p_, std::move(r))};
}

PolyModP reduce_mod_p(const PolyRat& f, std::int64_t p) {
  std::vector<std::int64_t> c;
  c.reserve(f.coeffs().size());
  Integer pz(static_cast<long>(p));
  for (const auto& q : f.coeffs()) {
    if (mpz_divisible_p(q.get_den().get_mpz_t(), pz.get_mpz_t()))
      throw degenerate_input("denominator divisible by p in reduction mod p");
    Integer num = q.get_num() % pz;
    Integer den = q.get_den() % pz;
    std::int64_t n = mpz_get_si(num.get_mpz_t());
    std::int64_t d = mpz_get_si(den.get_mpz_t());
    c.push_back(mulmod(((n % p) + p) % p, invmod(d, p), p));
  }
  return PolyModP(p, std::move(c));
}

PolyModP gcd(const PolyModP& f, const PolyModP& g) {
  PolyModP a = f, b = g;
  while (!b.is_zero()) {
    PolyModP r = a.divmod(b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

bool is_squarefree(const PolyModP& f) {
  if (f.degree() < 1) throw degenerate_input("is_squarefree requires degree >= 1");
  return gcd(f, f.derivative()).degree() == 0;
}

DegreeMultiset ddf_degrees(const PolyModP& f) {
  if (f.degree() < 1) throw degenerate_input("ddf requires degree >= 1");
  if (!is_squarefree(f)) throw degenerate_input("ddf requires squarefree input");
  const std::int64_t p = f.modulus();
  PolyModP g = f.monic();
  const PolyModP x = PolyModP::from_x(p);

  // frobenius power x^(p^d) mod g, advanced one squaring block per d
  auto powmod_poly = [&](const PolyModP& base, std::int64_t e, const PolyModP& mod) {
    PolyModP acc(p, {1});
    PolyModP b = base.divmod(mod).second;
    while (e > 0) {
      if (e & 1) acc = (acc * b).divmod(mod).second;
      b = (b * b).divmod(mod).second;
      e >>= 1;
    }
    return acc;
  };

  DegreeMultiset out;
  PolyModP h = x.divmod(g).second;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod_poly(h, p, g);
    PolyModP c = gcd(h - x.divmod(g).second, g);
    if (c.degree() > 0) {
      out[d] += c.degree() / d;
      g = g.divmod(c).first;
      if (g.degree() == 0) break;
      h = h.divmod(g).second;
    }
  }
  if (g.degree() > 0) out[g.degree()] += 1;
  return out;
}

MultipleRootShape multiple_root_shape(const PolyModP& f) {
  if (f.degree() < 3)
    throw degenerate_input("multiple_root_shape requires degree >= 3");
  const std::int64_t p = f.modulus();
  MultipleRootShape shape;

  PolyModP g = gcd(f, f.derivative());
  if (g.degree() == 0) {
    shape.kind = MultipleRootShape::Kind::Squarefree;
    return shape;
  }

  // A clean double root at c in F_p forces gcd(f, f') = (x - c) for odd p,
  // and (x - c)^2 in characteristic 2 where the derivative loses the factor.
  std::int64_t c;
  if (g.degree() == 1) {
    c = (p - g.coeff(0)) % p;
  } else if (g.degree() == 2 && p == 2 && g.coeff(1) == 0) {
    c = g.coeff(0);  // over F_2, c^2 = c
  } else {
    shape.kind = MultipleRootShape::Kind::Other;
    return shape;
  }

  PolyModP sq(p, {mulmod(c, c, p), ((-2 * c) % p + p) % p, 1});  // (x - c)^2
  auto [w, rem] = f.divmod(sq);
  if (!rem.is_zero() || w.degree() < 1 || w.eval(c) == 0 || !is_squarefree(w)) {
    shape.kind = MultipleRootShape::Kind::Other;
    return shape;
  }
  shape.kind = MultipleRootShape::Kind::DoubleRoot;
  shape.c = c;
  shape.w = w;
  return shape;
}

std::int64_t resultant(const PolyModP& f, const PolyModP& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const std::int64_t p = f.modulus();
  if (p != g.modulus()) throw degenerate_input("mixed moduli");
  const int n = f.degree();
  const int m = g.degree();
  if (n == 0 && m == 0) return 1 % p;
  if (n == 0) return powmod(f.coeff(0), m, p);
  if (m == 0) return powmod(g.coeff(0), n, p);
  const int dim = n + m;
  std::vector<std::vector<std::int64_t>> s(dim, std::vector<std::int64_t>(dim, 0));
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) s[row][row + j] = f.coeff(n - j);
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s[m + row][row + j] = g.coeff(m - j);

  std::int64_t det = 1;
  for (int k = 0; k < dim; ++k) {
    int pivot = k;
    while (pivot < dim && s[pivot][k] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != k) {
      std::swap(s[pivot], s[k]);
      det = (p - det) % p;
    }
    det = mulmod(det, s[k][k], p);
    const std::int64_t inv = invmod(s[k][k], p);
    for (int i = k + 1; i < dim; ++i) {
      if (s[i][k] == 0) continue;
      const std::int64_t factor = mulmod(s[i][k], inv, p);
      for (int j = k; j < dim; ++j)
        s[i][j] = ((s[i][j] - mulmod(factor, s[k][j], p)) % p + p) % p;
    }
  }
  return det;
}

std::int64_t discriminant(const PolyModP& f) {
  const int n = f.degree();
  if (n < 1) throw degenerate_input("discriminant requires degree >= 1");
  const std::int64_t p = f.modulus();
  if (n == 1) return 1 % p;
  const PolyModP fp = f.derivative();
  if (fp.is_zero()) return 0;  // f is a p-th power times a constant
  // The derivative may drop below formal degree n-1 when p divides leading
  // exponents; the Sylvester form at formal degrees rescales by lc^(n-1-m).
  std::int64_t res = resultant(f, fp);
  std::int64_t d = mulmod(res, powmod(f.leading(), n - 1 - fp.degree(), p), p);
  d = mulmod(d, invmod(f.leading(), p), p);
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = (p - d) % p;
  return d;
}

std::string to_string(const PolyModP& f) {
  std::ostringstream out;
  if (f.is_zero()) {
    out << "0";
  } else {
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
      std::int64_t c = f.coeff(i);
      if (c == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (i == 0) {
        out << c;
      } else {
        if (c != 1) out << c << "*";
        out << "x";
        if (i > 1) out << "^" << i;
      }
    }
  }
  out << " (mod " << f.modulus() << ")";
  return out.str();
}

}  // namespace homzero::poly
