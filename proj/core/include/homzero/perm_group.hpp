#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homzero/numeric.hpp"
#include "homzero/perm.hpp"

namespace homzero::grp {

inline constexpr int kMaxDegree = 64;
inline constexpr long kNormalSubgroupOrderCap = 20000;

struct FamilyTag {
  enum class Kind { Symmetric, Alternating, Cyclic, AffineLine, ProjectiveSpecial, ProjectiveGeneral };
  Kind kind;
  long a = 0;  // n for symmetric/alternating/cyclic, q for AGL(1,q), d for PSL/PGL
  long b = 0;  // q for PSL/PGL
  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Immutable after construction: the stabilizer chain and order are computed
// eagerly, so instances are safe to share across threads.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::optional<FamilyTag> family = std::nullopt);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Integer& order() const { return order_; }
  const std::optional<FamilyTag>& family() const { return family_; }

  bool is_trivial() const { return order_ == 1; }
  bool contains(const Permutation& p) const;

  // Every element, each written as a product of transversal representatives.
  std::vector<Permutation> elements() const;

  std::vector<int> orbit(int point) const;
  bool is_transitive() const;
  bool is_k_transitive(int k) const;

  // True when both groups have the same degree and the same element set.
  bool same_element_set(const PermGroup& other) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;       // strong generators fixing all earlier base points
    std::vector<int> orbit;              // discovery order, orbit[0] == base
    std::map<int, Permutation> transversal;  // point -> perm mapping base to point
  };

  PermGroup(int degree, std::vector<Permutation> generators, const std::vector<int>& base_seed,
            std::optional<FamilyTag> family);

  void build(const std::vector<int>& base_seed);
  void recompute_orbit(Level& level) const;
  void complete_level(std::size_t i);
  // Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level) const;

  friend std::vector<Permutation> pointwise_stabilizer_generators(const PermGroup& g,
                                                                  const std::vector<int>& fixed);

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  Integer order_;
  std::optional<FamilyTag> family_;
};

// Generators of the subgroup fixing every listed point.
std::vector<Permutation> pointwise_stabilizer_generators(const PermGroup& g,
                                                         const std::vector<int>& fixed);

// Smallest normal subgroup of g containing the seed permutations.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seed);

PermGroup derived_subgroup(const PermGroup& g);

// Subgroup generated by the union of the two generator sets (same degree).
PermGroup join(const PermGroup& a, const PermGroup& b);

// One representative per conjugacy class, identity first; deterministic order.
std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g);

// Complete list of normal subgroups, ascending order; joins of normal closures
// of conjugacy-class representatives.
std::vector<PermGroup> normal_subgroups(const PermGroup& g, long order_cap = kNormalSubgroupOrderCap);

}  // namespace homzero::grp
