#pragma once

#include "homzero/perm_group.hpp"

namespace homzero::grp {

// For H <= G1 x G2 with surjective projections: H1 = ker(pr2) as a subgroup
// of G1, H2 = ker(pr1) as a subgroup of G2, and the matched quotient order
// q = |G1/H1| = |G2/H2|, so |H| = |H1| * |H2| * q.
struct GoursatData {
  PermGroup h1;
  PermGroup h2;
  Integer quotient_order;
};

// H acts on the disjoint union of the point sets of G1 (first) and G2
// (second); its projections must be onto G1 and G2.
GoursatData goursat_decompose(const PermGroup& h, const PermGroup& g1, const PermGroup& g2);

}  // namespace homzero::grp
