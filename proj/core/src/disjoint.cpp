#include "homzero/disjoint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "homzero/errors.hpp"

namespace homzero::grp {

namespace {

std::optional<FamilyTag> effective_tag(const PermGroup& g) {
  if (g.family()) return g.family();
  const int n = g.degree();
  if (g.order() == factorial(static_cast<unsigned long>(n)) && n >= 2) {
    return FamilyTag{FamilyTag::Kind::Symmetric, n, 0};
  }
  if (n >= 3 && g.order() * 2 == factorial(static_cast<unsigned long>(n))) {
    bool all_even = true;
    for (const auto& gen : g.generators()) {
      if (!gen.is_even()) { all_even = false; break; }
    }
    if (all_even) return FamilyTag{FamilyTag::Kind::Alternating, n, 0};
  }
  return std::nullopt;
}

bool psl_is_simple(long d, long q) { return d > 1 && !(d == 2 && (q == 2 || q == 3)); }

std::optional<DisjointResult> catalogue(const FamilyTag& t1, const FamilyTag& t2) {
  using K = FamilyTag::Kind;
  if (t1 == t2) {
    return DisjointResult{DisjointVerdict::NotDisjoint,
                          "isomorphic groups (" + t1.to_string() + ") share themselves as a quotient"};
  }
  // Symmetric vs alternating.
  if (t1.kind == K::Symmetric && t2.kind == K::Alternating) {
    if (t2.a >= 5 || (t1.a == 3 && t2.a == 3)) {
      return DisjointResult{DisjointVerdict::Disjoint,
                            t1.to_string() + " and " + t2.to_string() + " have no common quotient"};
    }
  }
  // Alternating vs alternating, distinct degrees.
  if (t1.kind == K::Alternating && t2.kind == K::Alternating && t1.a != t2.a &&
      std::max(t1.a, t2.a) >= 5) {
    return DisjointResult{DisjointVerdict::Disjoint,
                          t1.to_string() + " and " + t2.to_string() + " have no common quotient"};
  }
  // PSL inside PGL, same parameters.
  if (t1.kind == K::ProjectiveSpecial && t2.kind == K::ProjectiveGeneral && t1.a == t2.a &&
      t1.b == t2.b) {
    long d = t1.a, q = t1.b;
    long r = std::gcd(d, q - 1);
    if (psl_is_simple(d, q) && r > 1) {
      return DisjointResult{DisjointVerdict::Disjoint,
                            t1.to_string() + " is simple and " + t2.to_string() +
                                " only extends it by a cyclic group of order " + std::to_string(r)};
    }
    if (r == 1) {
      return DisjointResult{DisjointVerdict::NotDisjoint,
                            t1.to_string() + " equals " + t2.to_string() + " when gcd(d, q-1) = 1"};
    }
  }
  return std::nullopt;
}

// ---- Quotient machinery for the brute-force path ----------------------------

constexpr long kHistogramCap = 1000;
constexpr long kIsoSearchCap = 200;

struct QuotientDesc {
  Integer q;
  Integer abelian_order;                       // order of the quotient's abelianization
  std::optional<std::map<long, long>> histogram;  // element order -> count, when q small
  std::vector<Permutation> reps;               // coset representatives, identity first
  const PermGroup* group;
  const PermGroup* kernel;
};

std::vector<int> coset_key(const Permutation& g, const std::vector<Permutation>& kernel_elements) {
  std::vector<int> best;
  for (const auto& n : kernel_elements) {
    std::vector<int> cand = (n * g).images();
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<Permutation> coset_representatives(const PermGroup& g, const PermGroup& kernel) {
  std::vector<Permutation> kernel_elements = kernel.elements();
  std::set<std::vector<int>> seen;
  std::vector<Permutation> reps{Permutation::identity(g.degree())};
  seen.insert(coset_key(reps[0], kernel_elements));
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const auto& s : g.generators()) {
      Permutation cand = reps[head] * s;
      if (seen.insert(coset_key(cand, kernel_elements)).second) reps.push_back(std::move(cand));
    }
  }
  return reps;
}

long coset_order(const Permutation& rep, const PermGroup& kernel) {
  Permutation x = rep;
  long m = 1;
  while (!kernel.contains(x)) {
    x = x * rep;
    ++m;
  }
  return m;
}

QuotientDesc describe_quotient(const PermGroup& g, const PermGroup& kernel, const PermGroup& derived) {
  QuotientDesc d;
  d.group = &g;
  d.kernel = &kernel;
  d.q = g.order() / kernel.order();
  d.abelian_order = g.order() / join(kernel, derived).order();
  if (d.q <= kHistogramCap || d.q <= kIsoSearchCap) {
    d.reps = coset_representatives(g, kernel);
    if (d.q <= kHistogramCap) {
      std::map<long, long> hist;
      for (const auto& r : d.reps) ++hist[coset_order(r, kernel)];
      d.histogram = std::move(hist);
    }
  }
  return d;
}

// Multiplication table on coset representative indices.
std::vector<std::vector<int>> coset_table(const QuotientDesc& d) {
  const auto kernel_elements = d.kernel->elements();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < d.reps.size(); ++i) {
    index.emplace(coset_key(d.reps[i], kernel_elements), static_cast<int>(i));
  }
  const int n = static_cast<int>(d.reps.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[i][j] = index.at(coset_key(d.reps[i] * d.reps[j], kernel_elements));
    }
  }
  return table;
}

long table_element_order(const std::vector<std::vector<int>>& t, int x) {
  long ord = 1;
  int acc = x;
  while (acc != 0) {
    acc = t[acc][x];
    ++ord;
  }
  return ord;
}

// Backtracking isomorphism search between two multiplication tables.
// Returns nullopt when the operation budget runs out.
class IsoSearch {
 public:
  IsoSearch(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b)
      : a_(std::move(a)), b_(std::move(b)), n_(static_cast<int>(a_.size())) {
    for (int i = 0; i < n_; ++i) {
      orders_a_.push_back(table_element_order(a_, i));
      orders_b_.push_back(table_element_order(b_, i));
    }
    // Greedy generating sequence for the first table.
    std::vector<bool> closed(n_, false);
    closed[0] = true;
    int closed_count = 1;
    while (closed_count < n_) {
      int pick = -1;
      for (int i = 0; i < n_; ++i) {
        if (!closed[i]) { pick = i; break; }
      }
      gens_.push_back(pick);
      // Close under products with everything already closed.
      std::vector<int> worklist{pick};
      closed[pick] = true;
      ++closed_count;
      for (std::size_t w = 0; w < worklist.size(); ++w) {
        for (int x = 0; x < n_; ++x) {
          if (!closed[x]) continue;
          for (int prod : {a_[worklist[w]][x], a_[x][worklist[w]]}) {
            if (!closed[prod]) {
              closed[prod] = true;
              ++closed_count;
              worklist.push_back(prod);
            }
          }
        }
      }
    }
  }

  std::optional<bool> run() {
    std::vector<int> img(n_, -1);
    std::vector<bool> used(n_, false);
    img[0] = 0;
    used[0] = true;
    std::vector<int> domain{0};
    bool found = false;
    if (!extend(0, img, used, domain, found)) return std::nullopt;
    return found;
  }

 private:
  // Returns false when the budget is exhausted; sets found on success.
  bool extend(std::size_t k, std::vector<int>& img, std::vector<bool>& used,
              std::vector<int>& domain, bool& found) {
    if (k == gens_.size()) {
      found = true;
      return true;
    }
    int g = gens_[k];
    for (int y = 1; y < n_; ++y) {
      if (used[y] || orders_b_[y] != orders_a_[g]) continue;
      auto img2 = img;
      auto used2 = used;
      auto domain2 = domain;
      if (close(g, y, img2, used2, domain2)) {
        if (!extend(k + 1, img2, used2, domain2, found)) return false;
        if (found) return true;
      }
      if (budget_ <= 0) return false;
    }
    return true;
  }

  // Adds g -> y and closes the partial map under products; false on conflict.
  bool close(int g, int y, std::vector<int>& img, std::vector<bool>& used, std::vector<int>& domain) {
    std::vector<int> work;
    auto assign = [&](int from, int to) {
      if (img[from] >= 0) return img[from] == to;
      if (used[to]) return false;
      img[from] = to;
      used[to] = true;
      domain.push_back(from);
      work.push_back(from);
      return true;
    };
    if (!assign(g, y)) return false;
    for (std::size_t w = 0; w < work.size(); ++w) {
      int x = work[w];
      // Copy: domain grows while we scan it.
      std::vector<int> snapshot = domain;
      for (int d : snapshot) {
        budget_ -= 2;
        if (budget_ <= 0) return false;
        if (!assign(a_[x][d], b_[img[x]][img[d]])) return false;
        if (!assign(a_[d][x], b_[img[d]][img[x]])) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<int>> a_;
  std::vector<std::vector<int>> b_;
  int n_;
  std::vector<long> orders_a_, orders_b_;
  std::vector<int> gens_;
  long budget_ = 50'000'000;
};

DisjointResult brute_force(const PermGroup& g1, const PermGroup& g2) {
  std::vector<PermGroup> normals1, normals2;
  try {
    normals1 = normal_subgroups(g1);
    normals2 = normal_subgroups(g2);
  } catch (const resource_limit&) {
    return {DisjointVerdict::Unknown, "group order exceeds the quotient-enumeration cap"};
  }
  PermGroup derived1 = derived_subgroup(g1);
  PermGroup derived2 = derived_subgroup(g2);

  std::vector<QuotientDesc> quots1, quots2;
  for (const auto& n : normals1) {
    if (n.order() < g1.order()) quots1.push_back(describe_quotient(g1, n, derived1));
  }
  for (const auto& n : normals2) {
    if (n.order() < g2.order()) quots2.push_back(describe_quotient(g2, n, derived2));
  }

  bool unresolved = false;
  std::string unresolved_note;
  for (const auto& qa : quots1) {
    for (const auto& qb : quots2) {
      if (qa.q != qb.q) continue;
      if (qa.abelian_order != qb.abelian_order) continue;
      if (qa.histogram && qb.histogram && *qa.histogram != *qb.histogram) continue;
      if (qa.q <= kIsoSearchCap) {
        IsoSearch search(coset_table(qa), coset_table(qb));
        auto outcome = search.run();
        if (!outcome) {
          unresolved = true;
          unresolved_note = "isomorphism search budget exhausted at quotient order " + qa.q.get_str();
          continue;
        }
        if (*outcome) {
          return {DisjointVerdict::NotDisjoint,
                  "common quotient of order " + qa.q.get_str() + " found by isomorphism search"};
        }
        continue;  // exhaustive search proved the pair non-isomorphic
      }
      unresolved = true;
      unresolved_note = "matching fingerprints at quotient order " + qa.q.get_str() +
                        " exceed the isomorphism-search cap";
    }
  }
  if (unresolved) return {DisjointVerdict::Unknown, unresolved_note};
  return {DisjointVerdict::Disjoint, "no pair of nontrivial quotients is isomorphic"};
}

}  // namespace

DisjointResult are_disjoint(const PermGroup& g1, const PermGroup& g2) {
  if (g1.order() == 1 || g2.order() == 1) {
    return {DisjointVerdict::Disjoint, "a trivial group is disjoint from every group"};
  }
  Integer common;
  mpz_gcd(common.get_mpz_t(), g1.order().get_mpz_t(), g2.order().get_mpz_t());
  if (common == 1) {
    return {DisjointVerdict::Disjoint, "coprime orders admit no common nontrivial quotient"};
  }

  auto t1 = effective_tag(g1);
  auto t2 = effective_tag(g2);
  if (t1 && t2) {
    if (auto hit = catalogue(*t1, *t2)) return *hit;
    if (auto hit = catalogue(*t2, *t1)) return *hit;
  }

  // Common prime dividing both abelianization orders gives a shared cyclic
  // quotient; this works far beyond the enumeration caps.
  Integer ab1 = g1.order() / derived_subgroup(g1).order();
  Integer ab2 = g2.order() / derived_subgroup(g2).order();
  Integer abg;
  mpz_gcd(abg.get_mpz_t(), ab1.get_mpz_t(), ab2.get_mpz_t());
  if (abg > 1) {
    std::string p = "a prime divisor of " + abg.get_str();
    for (unsigned long c = 2; c < 1'000'000UL; c = next_prime(c)) {
      if (mpz_divisible_ui_p(abg.get_mpz_t(), c)) {
        p = std::to_string(c);
        break;
      }
      if (Integer(c) * c > abg) {
        p = abg.get_str();  // no divisor up to sqrt, so the gcd itself is prime
        break;
      }
    }
    return {DisjointVerdict::NotDisjoint, "common cyclic quotient C_" + p + " from the abelianizations"};
  }

  return brute_force(g1, g2);
}

}  // namespace homzero::grp
