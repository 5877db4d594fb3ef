#include "homzero/f2_module.hpp"

#include <random>
#include <utility>

#include "homzero/errors.hpp"

namespace homzero::f2 {

namespace {

constexpr int kNortonTrials = 8;
constexpr int kNortonWordsPerTrial = 64;
constexpr int kNortonNullityCap = 14;
constexpr int kExhaustiveDimCap = 16;
constexpr int kEndoDimCap = 128;

MatF2 random_word(std::mt19937_64& rng, const F2Module& m) {
  std::uniform_int_distribution<int> term_count(2, 4);
  std::uniform_int_distribution<int> factor_count(1, 3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(m.actions.size()) - 1);
  MatF2 acc(m.dimension, m.dimension);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    MatF2 prod = m.actions[static_cast<std::size_t>(pick(rng))];
    const int factors = factor_count(rng);
    for (int f = 1; f < factors; ++f) prod = prod * m.actions[static_cast<std::size_t>(pick(rng))];
    acc = acc + prod;
  }
  return acc;
}

// Spins every nonzero vector in the row space of `kernel`; true when all of
// them generate the full module.
bool all_kernel_spins_full(const MatF2& kernel, const std::vector<MatF2>& actions, int dim) {
  const int k = kernel.rows();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    MatF2 v(1, dim);
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u)
        for (int c : kernel.row_bits(i)) v.set(0, c, !v.get(0, c));
    if (spin(v, actions).rows() < dim) return false;
  }
  return true;
}

}  // namespace

F2Module trivial_module(std::size_t generator_count, std::string label) {
  F2Module m;
  m.dimension = 1;
  m.label = std::move(label);
  const std::size_t count = generator_count == 0 ? 1 : generator_count;
  for (std::size_t i = 0; i < count; ++i) m.actions.push_back(MatF2::identity(1));
  return m;
}

F2Module heart_module(const grp::PermGroup& g) {
  const int n = g.degree();
  if (n < 3) throw degenerate_input("heart module requires degree >= 3");
  const bool even = n % 2 == 0;
  const int dim = even ? n - 2 : n - 1;
  // Coordinates live in the basis b_i = e_i + e_{i+1}, i = 0..n-2, with
  // e_j + e_k = b_j + ... + b_{k-1} for j < k. For even n the all-ones
  // vector b_0 + b_2 + ... + b_{n-2} is modded out, eliminating b_{n-2}.
  auto matrix_of = [&](const grp::Permutation& p) {
    MatF2 m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      int j = p(i), k = p(i + 1);
      if (j > k) std::swap(j, k);
      std::vector<char> raw(static_cast<std::size_t>(n) - 1, 0);
      for (int c = j; c < k; ++c) raw[static_cast<std::size_t>(c)] = 1;
      if (even && raw[static_cast<std::size_t>(n) - 2]) {
        raw[static_cast<std::size_t>(n) - 2] = 0;
        for (int c = 0; c <= n - 4; c += 2) raw[static_cast<std::size_t>(c)] ^= 1;
      }
      for (int c = 0; c < dim; ++c)
        if (raw[static_cast<std::size_t>(c)]) m.set(i, c, true);
    }
    return m;
  };
  F2Module mod;
  mod.dimension = dim;
  mod.label = "heart(" + (g.family() ? g.family()->to_string()
                                     : "degree-" + std::to_string(n) + " group") + ")";
  for (const grp::Permutation& p : g.generators()) mod.actions.push_back(matrix_of(p));
  if (mod.actions.empty()) mod.actions.push_back(MatF2::identity(dim));
  return mod;
}

int endomorphism_dimension(const F2Module& m) {
  const int d = m.dimension;
  if (d < 1) throw degenerate_input("endomorphism solve requires dimension >= 1");
  if (d > kEndoDimCap) throw resource_limit("endomorphism solve capped at dimension 128");
  // Unknown X is flattened as x_{rc} -> column r*d + c; each generator A
  // contributes d*d linear constraints (X A + A X)_{ij} = 0.
  const int unknowns = d * d;
  MatF2 system(static_cast<int>(m.actions.size()) * unknowns, unknowns);
  auto flip = [&](int r, int c) { system.set(r, c, !system.get(r, c)); };
  int row = 0;
  for (const MatF2& a : m.actions) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int c = 0; c < d; ++c) {
          if (a.get(c, j)) flip(row, i * d + c);
          if (a.get(i, c)) flip(row, c * d + j);
        }
        ++row;
      }
  }
  return unknowns - system.rank();
}

std::optional<bool> norton_simple(const F2Module& m, std::uint64_t seed) {
  const int d = m.dimension;
  if (d < 1) throw degenerate_input("simplicity requires dimension >= 1");
  if (d == 1) return true;
  std::mt19937_64 rng(seed);
  std::vector<MatF2> transposed_actions;
  transposed_actions.reserve(m.actions.size());
  for (const MatF2& a : m.actions) transposed_actions.push_back(a.transposed());
  for (int trial = 0; trial < kNortonTrials; ++trial)
    for (int w = 0; w < kNortonWordsPerTrial; ++w) {
      MatF2 theta = random_word(rng, m);
      const int nullity = d - theta.rank();
      if (nullity == 0 || nullity > kNortonNullityCap) continue;
      if (!all_kernel_spins_full(theta.row_kernel(), m.actions, d)) return false;
      if (!all_kernel_spins_full(theta.transposed().row_kernel(), transposed_actions, d))
        return false;
      return true;
    }
  return std::nullopt;
}

bool exhaustive_simple(const F2Module& m) {
  const int d = m.dimension;
  if (d < 1) throw degenerate_input("simplicity requires dimension >= 1");
  if (d > kExhaustiveDimCap) throw resource_limit("exhaustive simplicity scan capped at dimension 16");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << d); ++mask) {
    MatF2 v(1, d);
    for (int c = 0; c < d; ++c)
      if ((mask >> c) & 1u) v.set(0, c, true);
    if (spin(v, m.actions).rows() < d) return false;
  }
  return true;
}

SimplicityVerdict simplicity(const F2Module& m, std::uint64_t seed) {
  if (m.dimension < 1) throw degenerate_input("simplicity requires dimension >= 1");
  if (m.actions.empty()) throw degenerate_input("module needs at least one generator action");
  SimplicityVerdict v;
  if (std::optional<bool> norton = norton_simple(m, seed)) {
    v.simple = *norton;
    v.method = SimplicityMethod::norton;
  } else if (m.dimension <= kExhaustiveDimCap) {
    v.simple = exhaustive_simple(m);
    v.method = SimplicityMethod::exhaustive;
  } else {
    throw inconclusive("simplicity of " + m.label + " undecided: no singular word of nullity <= 14 in " +
                       std::to_string(kNortonTrials * kNortonWordsPerTrial) +
                       " samples and dimension " + std::to_string(m.dimension) +
                       " is past the exhaustive cap of 16");
  }
  v.endomorphism_dimension = endomorphism_dimension(m);
  v.absolutely_simple = v.simple && v.endomorphism_dimension == 1;
  return v;
}

F2Module hom_module(const F2Module& m1, const F2Module& m2) {
  if (m1.dimension < 1 || m2.dimension < 1)
    throw degenerate_input("hom module requires nonzero modules");
  const int d1 = m1.dimension, d2 = m2.dimension;
  const int d = d1 * d2;
  // phi is a d1 x d2 matrix flattened row-major; (h1, h2) sends phi to
  // A1^{-1} phi A2, so basis element E_{ij} goes to the matrix with entry
  // (A1^{-1})_{ri} (A2)_{jc} at (r, c).
  auto pair_action = [&](const MatF2& a1, const MatF2& a2) {
    std::optional<MatF2> a1inv = a1.inverse();
    if (!a1inv) throw degenerate_input("generator action is not invertible");
    MatF2 big(d, d);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j) {
        const int row = i * d2 + j;
        for (int r = 0; r < d1; ++r) {
          if (!a1inv->get(r, i)) continue;
          for (int c = 0; c < d2; ++c)
            if (a2.get(j, c)) big.set(row, r * d2 + c, true);
        }
      }
    return big;
  };
  F2Module out;
  out.dimension = d;
  out.label = "hom(" + m1.label + ", " + m2.label + ")";
  const MatF2 id1 = MatF2::identity(d1), id2 = MatF2::identity(d2);
  for (const MatF2& a : m1.actions) out.actions.push_back(pair_action(a, id2));
  for (const MatF2& a : m2.actions) out.actions.push_back(pair_action(id1, a));
  return out;
}

}  // namespace homzero::f2
