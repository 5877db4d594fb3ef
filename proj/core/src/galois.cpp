#include "homzero/galois.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homzero/errors.hpp"
#include "homzero/poly_mod_p.hpp"

namespace homzero::galois {
namespace {

constexpr long kDivisorIterationCap = 200000;
constexpr long kOrderCap = 1000000000000L;

std::vector<Integer> primitive_integral_coeffs(const poly::PolyRat& f) {
  auto coeffs = f.integral_form().first;
  Integer g = 0;
  for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : coeffs) c /= g;
  }
  return coeffs;
}

// The reduction mod p when p is a good prime for these cleared coefficients
// (degree preserved, image squarefree), otherwise nothing.
std::optional<poly::PolyModP> reduce_if_good(const std::vector<Integer>& coeffs, std::uint64_t p) {
  if (mpz_fdiv_ui(coeffs.back().get_mpz_t(), p) == 0) return std::nullopt;
  std::vector<std::int64_t> r(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    r[i] = static_cast<std::int64_t>(mpz_fdiv_ui(coeffs[i].get_mpz_t(), p));
  }
  poly::PolyModP fbar(static_cast<std::int64_t>(p), std::move(r));
  if (!poly::is_squarefree(fbar)) return std::nullopt;
  return fbar;
}

// Positive divisors of |m| ascending, or nothing when the trial loop would
// exceed the iteration cap. Pre: m != 0.
std::optional<std::vector<Integer>> bounded_divisors(const Integer& m_in) {
  Integer m = abs(m_in);
  std::vector<Integer> small, large;
  long iterations = 0;
  for (Integer d = 1; d * d <= m; ++d) {
    if (++iterations > kDivisorIterationCap) return std::nullopt;
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Integer q = m / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct RootSearch {
  std::optional<Rational> root;
  bool complete = false;
};

// Rational root theorem over the cleared coefficients. `complete` means the
// candidate set was enumerated exhaustively, so an empty result certifies
// that no rational root exists.
RootSearch find_rational_root(const poly::PolyRat& f) {
  auto coeffs = primitive_integral_coeffs(f);
  if (coeffs.front() == 0) return {Rational(0), true};
  auto numerators = bounded_divisors(coeffs.front());
  auto denominators = bounded_divisors(coeffs.back());
  if (!numerators || !denominators) return {std::nullopt, false};
  for (const auto& a : *numerators) {
    for (const auto& b : *denominators) {
      Rational candidate(a, b);
      candidate.canonicalize();
      if (f.eval(candidate) == 0) return {candidate, true};
      if (f.eval(-candidate) == 0) return {-candidate, true};
    }
  }
  return {std::nullopt, true};
}

std::string type_to_string(const CycleType& t) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ", ";
    out << t[i];
  }
  out << "}";
  return out.str();
}

// q >= 2 when t is one q-cycle plus fixed points, else 0.
int pure_cycle_length(const CycleType& t) {
  if (t.empty()) return 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] != 1) return 0;
  }
  return t.back() >= 2 ? t.back() : 0;
}

// Sums of sub-multisets of the factor degrees: the degrees a factor of the
// lift could have, as far as this reduction can tell.
std::set<int> subset_sums(const poly::DegreeMultiset& degrees, int n) {
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (const auto& [d, count] : degrees) {
    for (int rep = 0; rep < count; ++rep) {
      for (int s = n; s >= d; --s) {
        if (reachable[s - d]) reachable[s] = 1;
      }
    }
  }
  std::set<int> out;
  for (int s = 0; s <= n; ++s) {
    if (reachable[s]) out.insert(s);
  }
  return out;
}

std::string set_to_string(const std::set<int>& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int x : s) {
    if (!first) out << ", ";
    out << x;
    first = false;
  }
  out << "}";
  return out.str();
}

CycleType expand_degrees(const poly::DegreeMultiset& degrees) {
  CycleType t;
  for (const auto& [d, count] : degrees) {
    for (int rep = 0; rep < count; ++rep) t.push_back(d);
  }
  return t;
}

// For monic x^4 + b x^3 + c x^2 + d x + e the cubic whose roots are the
// partition sums x1x2 + x3x4, x1x3 + x2x4, x1x4 + x2x3. Its discriminant
// equals disc(f), so it stays squarefree whenever f is.
poly::PolyRat resolvent_cubic(const poly::PolyRat& f) {
  auto m = f.monic();
  Rational b = m.coeff(3), c = m.coeff(2), d = m.coeff(1), e = m.coeff(0);
  return poly::PolyRat({-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, Rational(1)});
}

void finish_with_disc_only(GaloisVerdict& v) {
  if (v.disc_square) {
    v.status = GaloisStatus::ContainedInAn;
    v.rules_fired.push_back("square discriminant: the group lies in the alternating group");
  } else {
    v.status = GaloisStatus::Unknown;
  }
}

}  // namespace

IrreducibilityCertificate irreducibility_certificate(const poly::PolyRat& f, int prime_budget) {
  int n = f.degree();
  if (n < 2) throw degenerate_input("irreducibility_certificate: degree must be at least 2");
  if (prime_budget < 0) throw degenerate_input("irreducibility_certificate: prime budget must be nonnegative");
  if (!poly::is_squarefree(f)) {
    throw degenerate_input("irreducibility_certificate: requires a squarefree polynomial");
  }

  IrreducibilityCertificate cert;
  RootSearch roots = find_rational_root(f);
  if (roots.root) {
    cert.status = IrreducibilityStatus::Reducible;
    cert.rational_root = *roots.root;
    cert.detail = "rational root " + roots.root->get_str() + " splits off a linear factor";
    return cert;
  }
  if (n <= 3 && roots.complete) {
    cert.status = IrreducibilityStatus::Irreducible;
    cert.detail = "degree " + std::to_string(n) + " with no rational root";
    return cert;
  }

  auto coeffs = primitive_integral_coeffs(f);
  std::set<int> consistent;
  for (int s = 0; s <= n; ++s) consistent.insert(s);
  const std::set<int> pinned = {0, n};

  std::uint64_t p = 2;
  std::vector<long> good;
  while (static_cast<int>(good.size()) < prime_budget) {
    if (auto fbar = reduce_if_good(coeffs, p)) {
      good.push_back(static_cast<long>(p));
      auto degrees = poly::ddf_degrees(*fbar);
      if (degrees.size() == 1 && degrees.begin()->first == n) {
        cert.status = IrreducibilityStatus::Irreducible;
        cert.witness_prime = static_cast<long>(p);
        cert.detail = "irreducible modulo " + std::to_string(p);
        return cert;
      }
      auto sums = subset_sums(degrees, n);
      std::set<int> next;
      std::set_intersection(consistent.begin(), consistent.end(), sums.begin(), sums.end(),
                            std::inserter(next, next.begin()));
      consistent = std::move(next);
      if (consistent == pinned) {
        cert.status = IrreducibilityStatus::Irreducible;
        cert.sieve_primes = good;
        cert.detail = "factor-degree sieve: " + std::to_string(good.size()) +
                      " reductions leave no proper factor degree";
        return cert;
      }
    }
    p = next_prime(p);
  }

  cert.status = IrreducibilityStatus::Unknown;
  cert.detail = "no witness among " + std::to_string(good.size()) +
                " good primes; consistent factor degrees " + set_to_string(consistent);
  return cert;
}

bool disc_is_square(const poly::PolyRat& f) {
  Rational d = poly::discriminant(f);
  if (d == 0) throw degenerate_input("disc_is_square: requires a squarefree polynomial");
  return is_square(d);
}

std::vector<std::pair<long, CycleType>> sample_cycle_types(const poly::PolyRat& f, int prime_budget) {
  if (f.degree() < 1) throw degenerate_input("sample_cycle_types: degree must be at least 1");
  if (prime_budget < 0) throw degenerate_input("sample_cycle_types: prime budget must be nonnegative");
  if (!poly::is_squarefree(f)) {
    throw degenerate_input("sample_cycle_types: requires a squarefree polynomial");
  }

  auto coeffs = primitive_integral_coeffs(f);
  std::vector<std::pair<long, CycleType>> out;
  std::uint64_t p = 2;
  while (static_cast<int>(out.size()) < prime_budget) {
    if (auto fbar = reduce_if_good(coeffs, p)) {
      out.emplace_back(static_cast<long>(p), expand_degrees(poly::ddf_degrees(*fbar)));
    }
    p = next_prime(p);
  }
  return out;
}

CycleType power_type(const CycleType& t, long k) {
  CycleType out;
  long kk = std::labs(k);
  for (int len : t) {
    if (len < 1) throw degenerate_input("power_type: cycle lengths must be positive");
    long g = std::gcd(static_cast<long>(len), kk);
    for (long rep = 0; rep < g; ++rep) out.push_back(static_cast<int>(len / g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycleType> power_closure(const CycleType& t) {
  if (t.empty()) throw degenerate_input("power_closure: empty cycle type");

  // order = lcm of the lengths, assembled from per-length factorizations
  std::map<long, int> prime_exponents;
  for (int len : t) {
    if (len < 1) throw degenerate_input("power_closure: cycle lengths must be positive");
    long rest = len;
    for (long q = 2; q * q <= rest; ++q) {
      int e = 0;
      while (rest % q == 0) {
        rest /= q;
        ++e;
      }
      if (e > 0) prime_exponents[q] = std::max(prime_exponents[q], e);
    }
    if (rest > 1) prime_exponents[rest] = std::max(prime_exponents[rest], 1);
  }
  long order = 1;
  for (const auto& [q, e] : prime_exponents) {
    for (int i = 0; i < e; ++i) {
      if (order > kOrderCap / q) throw resource_limit("power_closure: element order too large");
      order *= q;
    }
  }

  // type(sigma^k) depends only on gcd(k, order), so the divisors of the
  // order exhaust the closure
  std::vector<long> divisors = {1};
  for (const auto& [q, e] : prime_exponents) {
    std::size_t base = divisors.size();
    long power = 1;
    for (int i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
    }
  }

  std::set<CycleType> seen;
  for (long d : divisors) seen.insert(power_type(t, d));
  return {seen.begin(), seen.end()};
}

std::string to_string(GaloisStatus s) {
  switch (s) {
    case GaloisStatus::SnProven:
      return "Sn proven";
    case GaloisStatus::AnProven:
      return "An proven";
    case GaloisStatus::ContainedInAn:
      return "contained in An";
    case GaloisStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

GaloisVerdict identify_sn_an(const poly::PolyRat& f, int prime_budget) {
  int n = f.degree();
  if (n < 3) throw degenerate_input("identify_sn_an: degree must be at least 3");
  if (prime_budget < 0) throw degenerate_input("identify_sn_an: prime budget must be nonnegative");
  if (!poly::is_squarefree(f)) {
    throw degenerate_input("identify_sn_an: requires a squarefree polynomial");
  }

  GaloisVerdict v;
  v.disc_square = disc_is_square(f);

  auto irreducibility = irreducibility_certificate(f, prime_budget);
  if (irreducibility.status != IrreducibilityStatus::Irreducible) {
    v.rules_fired.push_back(irreducibility.status == IrreducibilityStatus::Reducible
                                ? "f is reducible, so the action on its roots is intransitive"
                                : "irreducibility unresolved: " + irreducibility.detail);
    finish_with_disc_only(v);
    return v;
  }
  v.rules_fired.push_back("R1: f is irreducible (" + irreducibility.detail +
                          "), so the group is transitive on the roots");

  if (n == 3) {
    if (v.disc_square) {
      v.status = GaloisStatus::AnProven;
      v.rules_fired.push_back("cubic with square discriminant: the transitive group is A3");
    } else {
      v.status = GaloisStatus::SnProven;
      v.rules_fired.push_back("cubic with nonsquare discriminant: the group is S3");
    }
    return v;
  }

  if (n == 4) {
    auto resolvent = resolvent_cubic(f);
    auto roots = find_rational_root(resolvent);
    if (!roots.root && !roots.complete) {
      v.rules_fired.push_back("resolvent cubic root search exceeded the divisor enumeration cap");
      finish_with_disc_only(v);
      return v;
    }
    if (roots.root) {
      v.rules_fired.push_back("resolvent cubic " + poly::to_string(resolvent) +
                              " has rational root " + roots.root->get_str() +
                              ": the group stabilizes a pairing of the roots");
      finish_with_disc_only(v);
      return v;
    }
    v.rules_fired.push_back("resolvent cubic " + poly::to_string(resolvent) +
                            " is irreducible: the group is A4 or S4");
    if (v.disc_square) {
      v.status = GaloisStatus::AnProven;
      v.rules_fired.push_back("square discriminant: An proven");
    } else {
      v.status = GaloisStatus::SnProven;
      v.rules_fired.push_back("nonsquare discriminant rules out A4: Sn proven");
    }
    return v;
  }

  v.witnesses = sample_cycle_types(f, prime_budget);

  struct RuleHit {
    long p = 0;
    CycleType sampled;
    CycleType derived;
    int q = 0;
  };
  std::optional<RuleHit> primitivity, transposition, alternating;
  for (const auto& [p, sampled] : v.witnesses) {
    for (const auto& derived : power_closure(sampled)) {
      int q = pure_cycle_length(derived);
      if (q == 0) continue;
      bool prime_q = is_prime(static_cast<std::uint64_t>(q));
      if (!primitivity && ((prime_q && 2 * q > n) || q == n - 1)) {
        primitivity = RuleHit{p, sampled, derived, q};
      }
      if (!transposition && q == 2) transposition = RuleHit{p, sampled, derived, q};
      if (!alternating && (q == 3 || (prime_q && q <= n - 3))) {
        alternating = RuleHit{p, sampled, derived, q};
      }
    }
  }

  if (primitivity) {
    const auto& hit = *primitivity;
    std::string reason = (is_prime(static_cast<std::uint64_t>(hit.q)) && 2 * hit.q > n)
                             ? "a " + std::to_string(hit.q) + "-cycle of prime length above n/2"
                             : "an (n-1)-cycle";
    v.rules_fired.push_back("R2: type " + type_to_string(hit.sampled) + " mod " +
                            std::to_string(hit.p) + " powers to " + type_to_string(hit.derived) +
                            ", " + reason + ", so the group is primitive");
    if (transposition) {
      if (v.disc_square) {
        throw std::logic_error("identify_sn_an: transposition witness against a square discriminant");
      }
      const auto& t = *transposition;
      v.status = GaloisStatus::SnProven;
      v.rules_fired.push_back("R3: type " + type_to_string(t.sampled) + " mod " +
                              std::to_string(t.p) +
                              " powers to a transposition; a primitive group containing a "
                              "transposition is the full symmetric group (Jordan)");
      return v;
    }
    if (alternating) {
      const auto& a = *alternating;
      v.rules_fired.push_back("R4: type " + type_to_string(a.sampled) + " mod " +
                              std::to_string(a.p) + " powers to a " + std::to_string(a.q) +
                              "-cycle; a primitive group containing a prime cycle on at most n-3 "
                              "points (or a 3-cycle) contains the alternating group (Jordan)");
      if (v.disc_square) {
        v.status = GaloisStatus::AnProven;
        v.rules_fired.push_back("square discriminant: An proven");
      } else {
        v.status = GaloisStatus::SnProven;
        v.rules_fired.push_back("nonsquare discriminant rules out An: Sn proven");
      }
      return v;
    }
  }

  finish_with_disc_only(v);
  return v;
}

}  // namespace homzero::galois
