#include "homzero/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homzero/errors.hpp"

namespace homzero::grp {

namespace {

// Small finite field F_{p^e}. Elements are encoded as integers in [0, q):
// the base-p digits of the encoding are the coefficients in the power basis
// of a fixed monic irreducible of degree e.
struct GaloisField {
  long p = 0;
  int e = 0;
  long q = 0;
  std::vector<long> irred;  // monic, ascending coefficients, size e+1

  explicit GaloisField(long q_in) {
    q = q_in;
    if (q < 2) throw degenerate_input("field size must be at least 2");
    long m = q;
    for (p = 2; p * p <= q; ++p) {
      if (m % p == 0) break;
    }
    if (m % p != 0) p = m;
    e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m != 1) throw degenerate_input("field size must be a prime power");
    irred = find_irreducible();
  }

  std::vector<long> digits(long v) const {
    std::vector<long> d(e, 0);
    for (int i = 0; i < e; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  long encode(const std::vector<long>& d) const {
    long v = 0;
    for (int i = e - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(d.size()) ? d[i] : 0);
    return v;
  }

  long add(long a, long b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }

  long mul(long a, long b) const {
    auto da = digits(a), db = digits(b);
    std::vector<long> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    // Reduce by the monic irreducible.
    for (int i = static_cast<int>(prod.size()) - 1; i >= e; --i) {
      long c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (int k = 0; k < e; ++k) {
        prod[i - e + k] = ((prod[i - e + k] - c * irred[k]) % p + p) % p;
      }
    }
    prod.resize(e);
    return encode(prod);
  }

  long pow(long a, long k) const {
    long r = 1;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  long inv(long a) const {
    if (a == 0) throw degenerate_input("inverting zero field element");
    return pow(a, q - 2);
  }

  long primitive_element() const {
    for (long g = 1; g < q; ++g) {
      long x = g;
      long ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q - 1) return g;
    }
    throw degenerate_input("no primitive element found");
  }

 private:
  // Polynomials over F_p as ascending coefficient vectors, for the
  // irreducibility search only.
  static std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& b, long p) {
    while (a.size() >= b.size()) {
      long lead = a.back();  // b is monic
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::size_t pos = a.size() - b.size() + i;
        a[pos] = ((a[pos] - lead * b[i]) % p + p) % p;
      }
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    return a;
  }

  std::vector<long> find_irreducible() const {
    if (e == 1) return {0, 1};  // x; unused in degree-1 reduction
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
      std::vector<long> cand(e + 1, 0);
      long v = c;
      for (int i = 0; i < e; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      cand[e] = 1;
      bool reducible = false;
      long dcount = p;
      for (int deg = 1; !reducible && 2 * deg <= e; ++deg, dcount *= p) {
        for (long dc = 0; dc < dcount; ++dc) {
          std::vector<long> div(deg + 1, 0);
          long w = dc;
          for (int i = 0; i < deg; ++i) {
            div[i] = w % p;
            w /= p;
          }
          div[deg] = 1;
          if (poly_rem(cand, div, p).empty()) {
            reducible = true;
            break;
          }
        }
      }
      if (!reducible) return cand;
    }
    throw degenerate_input("no irreducible polynomial found");
  }
};

using Matrix = std::vector<std::vector<long>>;

Matrix identity_matrix(int d) {
  Matrix m(d, std::vector<long>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

struct ProjectiveSpace {
  const GaloisField& field;
  int d;
  std::vector<std::vector<long>> points;  // normalized, sorted
  std::map<std::vector<long>, int> index;

  ProjectiveSpace(const GaloisField& f, int dim) : field(f), d(dim) {
    for (int last = 0; last < d; ++last) {
      std::vector<long> v(d, 0);
      v[last] = 1;
      long combos = 1;
      for (int i = 0; i < last; ++i) combos *= field.q;
      for (long c = 0; c < combos; ++c) {
        long w = c;
        for (int i = 0; i < last; ++i) {
          v[i] = w % field.q;
          w /= field.q;
        }
        points.push_back(v);
      }
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], static_cast<int>(i));
  }

  std::vector<long> normalize(std::vector<long> v) const {
    int last = -1;
    for (int i = d - 1; i >= 0; --i) {
      if (v[i] != 0) {
        last = i;
        break;
      }
    }
    if (last < 0) throw degenerate_input("zero vector has no projective class");
    long s = field.inv(v[last]);
    for (auto& c : v) c = field.mul(c, s);
    return v;
  }

  Permutation permutation_of(const Matrix& m) const {
    std::vector<int> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<long> w(d, 0);
      for (int j = 0; j < d; ++j) {
        long acc = 0;
        for (int k = 0; k < d; ++k) acc = field.add(acc, field.mul(points[i][k], m[k][j]));
        w[j] = acc;
      }
      img[i] = index.at(normalize(std::move(w)));
    }
    return Permutation(std::move(img));
  }
};

std::vector<Permutation> special_linear_generators(const GaloisField& f, const ProjectiveSpace& space, int d) {
  std::vector<Permutation> gens;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      long basis = 1;
      for (int k = 0; k < f.e; ++k) {
        Matrix m = identity_matrix(d);
        m[i][j] = basis;
        gens.push_back(space.permutation_of(m));
        basis *= f.p;
      }
    }
  }
  return gens;
}

Integer general_linear_order(int d, long q) {
  Integer qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
  Integer order = 1;
  Integer qi = 1;
  for (int i = 0; i < d; ++i) {
    order *= (qd - qi);
    qi *= static_cast<unsigned long>(q);
  }
  return order;
}

}  // namespace

PermGroup symmetric_group(int n) {
  if (n < 1) throw degenerate_input("symmetric group needs positive degree");
  FamilyTag tag{FamilyTag::Kind::Symmetric, n, 0};
  if (n == 1) return PermGroup(1, {}, tag);
  std::vector<Permutation> gens{Permutation::transposition(n, 0, 1)};
  if (n >= 3) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens), tag);
}

PermGroup alternating_group(int n) {
  if (n < 1) throw degenerate_input("alternating group needs positive degree");
  FamilyTag tag{FamilyTag::Kind::Alternating, n, 0};
  if (n <= 2) return PermGroup(n, {}, tag);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n >= 4) {
    std::vector<int> cyc;
    for (int i = (n % 2 == 0) ? 1 : 0; i < n; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens), tag);
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw degenerate_input("cyclic group needs positive degree");
  FamilyTag tag{FamilyTag::Kind::Cyclic, n, 0};
  if (n == 1) return PermGroup(1, {}, tag);
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return PermGroup(n, {Permutation::from_cycles(n, {cyc})}, tag);
}

PermGroup affine_line_group(long q) {
  if (q > kMaxDegree) throw resource_limit("affine line has too many points");
  GaloisField f(q);
  std::vector<Permutation> gens;
  long basis = 1;
  for (int k = 0; k < f.e; ++k) {
    std::vector<int> img(q);
    for (long x = 0; x < q; ++x) img[x] = static_cast<int>(f.add(x, basis));
    gens.push_back(Permutation(std::move(img)));
    basis *= f.p;
  }
  if (q > 2) {
    long g = f.primitive_element();
    std::vector<int> img(q);
    for (long x = 0; x < q; ++x) img[x] = static_cast<int>(f.mul(g, x));
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(static_cast<int>(q), std::move(gens), FamilyTag{FamilyTag::Kind::AffineLine, q, 0});
}

PermGroup projective_special_group(int d, long q) {
  if (d < 2) throw degenerate_input("projective dimension must be at least 2");
  GaloisField f(q);
  Integer npoints = 0;
  Integer qk = 1;
  for (int i = 0; i < d; ++i) {
    npoints += qk;
    qk *= static_cast<unsigned long>(q);
  }
  if (npoints > kMaxDegree) throw resource_limit("projective space has too many points");
  ProjectiveSpace space(f, d);
  auto gens = special_linear_generators(f, space, d);
  return PermGroup(static_cast<int>(space.points.size()), std::move(gens),
                   FamilyTag{FamilyTag::Kind::ProjectiveSpecial, d, q});
}

PermGroup projective_general_group(int d, long q) {
  if (d < 2) throw degenerate_input("projective dimension must be at least 2");
  GaloisField f(q);
  Integer npoints = 0;
  Integer qk = 1;
  for (int i = 0; i < d; ++i) {
    npoints += qk;
    qk *= static_cast<unsigned long>(q);
  }
  if (npoints > kMaxDegree) throw resource_limit("projective space has too many points");
  ProjectiveSpace space(f, d);
  auto gens = special_linear_generators(f, space, d);
  if (q > 2) {
    Matrix m = identity_matrix(d);
    m[0][0] = f.primitive_element();
    gens.push_back(space.permutation_of(m));
  }
  return PermGroup(static_cast<int>(space.points.size()), std::move(gens),
                   FamilyTag{FamilyTag::Kind::ProjectiveGeneral, d, q});
}

Integer projective_special_order(int d, long q) {
  Integer gl = general_linear_order(d, q);
  Integer sl = gl / static_cast<unsigned long>(q - 1);
  unsigned long g = std::gcd(static_cast<unsigned long>(d), static_cast<unsigned long>(q - 1));
  return sl / g;
}

Integer projective_general_order(int d, long q) {
  return general_linear_order(d, q) / static_cast<unsigned long>(q - 1);
}

}  // namespace homzero::grp
