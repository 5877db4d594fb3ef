#include "homzero/goursat.hpp"

#include <stdexcept>

#include "homzero/errors.hpp"

namespace homzero::grp {

namespace {

Permutation project_low(const Permutation& p, int d1) {
  std::vector<int> img(d1);
  for (int i = 0; i < d1; ++i) img[i] = p(i);
  return Permutation(std::move(img));
}

Permutation project_high(const Permutation& p, int d1, int d2) {
  std::vector<int> img(d2);
  for (int i = 0; i < d2; ++i) img[i] = p(d1 + i) - d1;
  return Permutation(std::move(img));
}

Permutation embed_low(const Permutation& p, int total) {
  std::vector<int> img(total);
  for (int i = 0; i < total; ++i) img[i] = i < p.degree() ? p(i) : i;
  return Permutation(std::move(img));
}

Permutation embed_high(const Permutation& p, int d1, int total) {
  std::vector<int> img(total);
  for (int i = 0; i < total; ++i) img[i] = i < d1 ? i : p(i - d1) + d1;
  return Permutation(std::move(img));
}

}  // namespace

GoursatData goursat_decompose(const PermGroup& h, const PermGroup& g1, const PermGroup& g2) {
  const int d1 = g1.degree();
  const int d2 = g2.degree();
  if (h.degree() != d1 + d2) throw degenerate_input("degree of H must be the sum of the factor degrees");
  for (const auto& gen : h.generators()) {
    for (int i = 0; i < d1; ++i) {
      if (gen(i) >= d1) throw degenerate_input("H does not preserve the factor point sets");
    }
  }

  std::vector<Permutation> pr1, pr2;
  for (const auto& gen : h.generators()) {
    pr1.push_back(project_low(gen, d1));
    pr2.push_back(project_high(gen, d1, d2));
  }
  PermGroup p1(d1, pr1);
  PermGroup p2(d2, pr2);
  if (!p1.same_element_set(g1)) throw degenerate_input("projection of H onto the first factor is not G1");
  if (!p2.same_element_set(g2)) throw degenerate_input("projection of H onto the second factor is not G2");

  std::vector<int> high_points(d2), low_points(d1);
  for (int i = 0; i < d2; ++i) high_points[i] = d1 + i;
  for (int i = 0; i < d1; ++i) low_points[i] = i;

  std::vector<Permutation> k2_gens;  // fix every second-factor point
  for (const auto& g : pointwise_stabilizer_generators(h, high_points)) {
    k2_gens.push_back(project_low(g, d1));
  }
  std::vector<Permutation> k1_gens;  // fix every first-factor point
  for (const auto& g : pointwise_stabilizer_generators(h, low_points)) {
    k1_gens.push_back(project_high(g, d1, d2));
  }
  PermGroup h1(d1, std::move(k2_gens));
  PermGroup h2(d2, std::move(k1_gens));

  Integer q1 = g1.order() / h1.order();
  Integer q2 = g2.order() / h2.order();
  if (q1 != q2 || h.order() != h1.order() * h2.order() * q1) {
    throw std::logic_error("quotient orders of the two kernels disagree");
  }

  // Reconstruction spot checks: the lifted kernels embed in H, and the coset
  // map induced by generator products is well-defined.
  const int total = d1 + d2;
  for (const auto& a : h1.generators()) {
    if (!h.contains(embed_low(a, total))) throw std::logic_error("first kernel does not lift into H");
  }
  for (const auto& b : h2.generators()) {
    if (!h.contains(embed_high(b, d1, total))) throw std::logic_error("second kernel does not lift into H");
  }
  std::vector<Permutation> samples{Permutation::identity(total)};
  for (const auto& g : h.generators()) samples.push_back(g);
  for (const auto& a : h.generators()) {
    for (const auto& b : h.generators()) samples.push_back(a * b);
  }
  for (const auto& s : samples) {
    for (const auto& t : samples) {
      Permutation diff = s * t.inverse();
      bool same1 = h1.contains(project_low(diff, d1));
      bool same2 = h2.contains(project_high(diff, d1, d2));
      if (same1 != same2) throw std::logic_error("induced coset map is not well-defined");
    }
  }

  return GoursatData{std::move(h1), std::move(h2), std::move(q1)};
}

}  // namespace homzero::grp
