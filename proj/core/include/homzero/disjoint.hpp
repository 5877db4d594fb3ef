#pragma once

#include <string>

#include "homzero/perm_group.hpp"

namespace homzero::grp {

enum class DisjointVerdict { Disjoint, NotDisjoint, Unknown };

// Two finite groups are disjoint when their only common quotient up to
// isomorphism is the one-element group.
struct DisjointResult {
  DisjointVerdict verdict;
  std::string reason;  // rule that fired, or the common-quotient witness
};

// Catalogue rules fire first (symmetric/alternating pairs, PSL inside PGL);
// otherwise both quotient lattices are enumerated within caps and compared
// by fingerprint and, for small quotients, explicit isomorphism search.
// Symmetric in its arguments.
DisjointResult are_disjoint(const PermGroup& g1, const PermGroup& g2);

}  // namespace homzero::grp
