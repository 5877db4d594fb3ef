#pragma once

#include "homzero/perm_group.hpp"

namespace homzero::grp {

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);

// Maps x -> a*x + b on the q field elements, a nonzero. q a prime power.
PermGroup affine_line_group(long q);

// Image of SL(d,q) (respectively GL(d,q)) acting on the points of projective
// space P^{d-1}(F_q). Points are normalized so the last nonzero coordinate is
// 1 and are ordered lexicographically by coordinate encoding.
PermGroup projective_special_group(int d, long q);
PermGroup projective_general_group(int d, long q);

Integer projective_special_order(int d, long q);
Integer projective_general_order(int d, long q);

}  // namespace homzero::grp
