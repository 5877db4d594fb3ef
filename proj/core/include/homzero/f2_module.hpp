#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homzero/mat_f2.hpp"
#include "homzero/perm_group.hpp"

namespace homzero::f2 {

inline constexpr std::uint64_t kDefaultSimplicitySeed = 0x7a2d;

// A finite group acting linearly on F_2^dimension, given by one invertible
// matrix per group generator. `label` records which group and construction
// produced it.
struct F2Module {
  int dimension = 0;
  std::vector<MatF2> actions;
  std::string label;
};

// One-dimensional module with every generator acting trivially. Keeps at
// least one action so downstream code never sees an empty list.
F2Module trivial_module(std::size_t generator_count, std::string label = "trivial");

// The heart of the natural permutation module: the sum-zero hyperplane of
// F_2^n for odd n (dimension n-1), its quotient by the all-ones vector for
// even n (dimension n-2). Basis is fixed as b_i = e_i + e_{i+1} so generator
// matrices are byte-for-byte reproducible.
F2Module heart_module(const grp::PermGroup& g);

enum class SimplicityMethod { norton, exhaustive };

struct SimplicityVerdict {
  bool simple = false;
  int endomorphism_dimension = 1;
  bool absolutely_simple = false;
  SimplicityMethod method = SimplicityMethod::norton;
};

// Dimension of {X : X A = A X for every generator action A}. Always >= 1.
int endomorphism_dimension(const F2Module& m);

// Norton's irreducibility criterion over seeded random group-algebra words:
// for a singular word theta, the module is simple iff every nonzero vector
// of ker(theta) spins to the full space and every nonzero vector of
// ker(theta^T) spins to the full space under the transposed actions.
// Returns nullopt when the word budget ends with no usable singular word.
std::optional<bool> norton_simple(const F2Module& m, std::uint64_t seed);

// Spins every nonzero vector; only for dimension <= 16.
bool exhaustive_simple(const F2Module& m);

// Norton first, exhaustive fallback for dimension <= 16; throws inconclusive
// when neither route decides. absolutely_simple iff simple and the
// endomorphism algebra is just F_2.
SimplicityVerdict simplicity(const F2Module& m, std::uint64_t seed = kDefaultSimplicitySeed);

// Hom(M1, M2) as a module over H1 x H2: a pair (h1, h2) sends phi to
// tau2(h2) . phi . tau1(h1)^{-1}. Generators are (g, 1) for g in H1's list
// followed by (1, g) for g in H2's list.
F2Module hom_module(const F2Module& m1, const F2Module& m2);

}  // namespace homzero::f2
