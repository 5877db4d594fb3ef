#include "homzero/perm_group.hpp"

#include <algorithm>
#include <set>

#include "homzero/errors.hpp"

namespace homzero::grp {

namespace {

std::vector<Permutation> clean_generators(int degree, std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  for (auto& g : gens) {
    if (g.degree() != degree) throw degenerate_input("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::Symmetric: return "S" + std::to_string(a);
    case Kind::Alternating: return "A" + std::to_string(a);
    case Kind::Cyclic: return "C" + std::to_string(a);
    case Kind::AffineLine: return "AGL(1," + std::to_string(a) + ")";
    case Kind::ProjectiveSpecial: return "PSL(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::ProjectiveGeneral: return "PGL(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "?";
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::optional<FamilyTag> family)
    : PermGroup(degree, std::move(generators), {}, std::move(family)) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, const std::vector<int>& base_seed,
                     std::optional<FamilyTag> family)
    : degree_(degree), gens_(clean_generators(degree, std::move(generators))), order_(1),
      family_(std::move(family)) {
  if (degree < 1) throw degenerate_input("group degree must be positive");
  if (degree > kMaxDegree) throw resource_limit("group degree exceeds cap of 64");
  build(base_seed);
}

void PermGroup::recompute_orbit(Level& level) const {
  level.orbit.clear();
  level.transversal.clear();
  level.orbit.push_back(level.base);
  level.transversal.emplace(level.base, Permutation::identity(degree_));
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    int pt = level.orbit[head];
    const Permutation& reach = level.transversal.at(pt);
    for (const auto& s : level.gens) {
      int to = s(pt);
      if (!level.transversal.count(to)) {
        level.orbit.push_back(to);
        level.transversal.emplace(to, reach * s);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    int image = g(levels_[i].base);
    auto it = levels_[i].transversal.find(image);
    if (it == levels_[i].transversal.end()) return {std::move(g), i};
    g = g * it->second.inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::complete_level(std::size_t i) {
  recompute_orbit(levels_[i]);
  // Index-based loops: recursion may append strong generators to deeper
  // levels, but this level's gens and orbit stay fixed while we scan.
  for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
    int pt = levels_[i].orbit[oi];
    for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
      const Permutation schreier = levels_[i].transversal.at(pt) * levels_[i].gens[si] *
                                   levels_[i].transversal.at(levels_[i].gens[si](pt)).inverse();
      if (schreier.is_identity()) continue;
      auto [residue, j] = sift(schreier, i + 1);
      if (residue.is_identity()) continue;
      if (j == levels_.size()) {
        int moved = -1;
        for (int x = 0; x < degree_; ++x) {
          if (residue(x) != x) { moved = x; break; }
        }
        levels_.push_back(Level{moved, {}, {}, {}});
      }
      for (std::size_t l = i + 1; l <= j; ++l) levels_[l].gens.push_back(residue);
      for (std::size_t l = j; l > i; --l) complete_level(l);
    }
  }
}

void PermGroup::build(const std::vector<int>& base_seed) {
  for (int b : base_seed) {
    if (b < 0 || b >= degree_) throw degenerate_input("base point out of range");
    levels_.push_back(Level{b, {}, {}, {}});
  }
  for (const auto& g : gens_) {
    bool moves_base = false;
    for (const auto& lvl : levels_) {
      if (g(lvl.base) != lvl.base) { moves_base = true; break; }
    }
    if (!moves_base) {
      for (int x = 0; x < degree_; ++x) {
        if (g(x) != x) { levels_.push_back(Level{x, {}, {}, {}}); break; }
      }
    }
  }
  for (auto& lvl : levels_) lvl.gens.clear();
  for (const auto& g : gens_) {
    for (auto& lvl : levels_) {
      lvl.gens.push_back(g);
      if (g(lvl.base) != lvl.base) break;
    }
  }
  for (std::size_t i = levels_.size(); i-- > 0;) complete_level(i);
  order_ = 1;
  for (const auto& lvl : levels_) order_ *= static_cast<unsigned long>(lvl.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).first.is_identity();
}

std::vector<Permutation> PermGroup::elements() const {
  if (order_ > (1L << 21)) throw resource_limit("element enumeration over cap");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[i].orbit.size());
    for (const auto& e : out) {
      for (int pt : levels_[i].orbit) next.push_back(e * levels_[i].transversal.at(pt));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw degenerate_input("point out of range");
  std::vector<int> orb{point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (std::size_t head = 0; head < orb.size(); ++head) {
    for (const auto& g : gens_) {
      int to = g(orb[head]);
      if (!seen[to]) {
        seen[to] = true;
        orb.push_back(to);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == static_cast<std::size_t>(degree_); }

bool PermGroup::is_k_transitive(int k) const {
  if (k < 1 || k > degree_) throw degenerate_input("transitivity arity out of range");
  unsigned long long target = 1;
  for (int i = 0; i < k; ++i) {
    target *= static_cast<unsigned long long>(degree_ - i);
    if (target > 5'000'000ULL) throw resource_limit("tuple orbit too large");
  }
  std::vector<int> start(k);
  for (int i = 0; i < k; ++i) start[i] = i;
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens_) {
      std::vector<int> to(k);
      for (int i = 0; i < k; ++i) to[i] = g(queue[head][i]);
      if (seen.insert(to).second) {
        if (seen.size() == target) return true;
        queue.push_back(std::move(to));
      }
    }
  }
  return seen.size() == target;
}

bool PermGroup::same_element_set(const PermGroup& other) const {
  if (degree_ != other.degree_ || order_ != other.order_) return false;
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::vector<Permutation> pointwise_stabilizer_generators(const PermGroup& g, const std::vector<int>& fixed) {
  // Seeding the base with the points to fix puts them at the front of the
  // stabilizer chain, so the chain tail generates their pointwise stabilizer.
  PermGroup chain(g.degree(), g.generators(), fixed, std::nullopt);
  std::size_t depth = 0;
  std::set<int> want(fixed.begin(), fixed.end());
  while (depth < chain.levels_.size() && want.count(chain.levels_[depth].base)) ++depth;
  if (depth == chain.levels_.size()) return {};
  return clean_generators(g.degree(), chain.levels_[depth].gens);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seed) {
  std::vector<Permutation> gens = clean_generators(g.degree(), seed);
  PermGroup n(g.degree(), gens);
  std::vector<Permutation> queue = gens;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : g.generators()) {
      Permutation conj = s.inverse() * queue[head] * s;
      if (!n.contains(conj)) {
        gens.push_back(conj);
        queue.push_back(std::move(conj));
        n = PermGroup(g.degree(), gens);
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  for (const auto& a : g.generators()) {
    for (const auto& b : g.generators()) {
      comms.push_back(a.inverse() * b.inverse() * a * b);
    }
  }
  return normal_closure(g, comms);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw degenerate_input("joining groups of different degrees");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g) {
  std::vector<Permutation> elems = g.elements();
  std::set<Permutation> visited;
  std::vector<Permutation> reps;
  for (const auto& e : elems) {
    if (visited.count(e)) continue;
    reps.push_back(e);
    std::vector<Permutation> queue{e};
    visited.insert(e);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& s : g.generators()) {
        Permutation conj = s.inverse() * queue[head] * s;
        if (visited.insert(conj).second) queue.push_back(std::move(conj));
      }
    }
  }
  return reps;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g, long order_cap) {
  if (g.order() > order_cap) throw resource_limit("group order exceeds normal-subgroup cap");
  std::vector<PermGroup> found{PermGroup(g.degree(), {})};
  auto present = [&found](const PermGroup& cand) {
    for (const auto& n : found) {
      if (n.same_element_set(cand)) return true;
    }
    return false;
  };
  for (const auto& rep : conjugacy_class_representatives(g)) {
    if (rep.is_identity()) continue;
    PermGroup closure = normal_closure(g, {rep});
    if (!present(closure)) found.push_back(std::move(closure));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        PermGroup j2 = join(found[i], found[j]);
        if (!present(j2)) {
          found.push_back(std::move(j2));
          grew = true;
          if (found.size() > 4096) throw resource_limit("normal subgroup lattice too large");
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const PermGroup& x, const PermGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return found;
}

}  // namespace homzero::grp
