#include "homzero/niceness.hpp"

#include "homzero/errors.hpp"

namespace homzero::f2 {

std::string to_string(Niceness v) {
  switch (v) {
    case Niceness::VeryNice: return "very nice";
    case Niceness::NiceNotVeryNice: return "nice, not very nice";
    case Niceness::NotNice: return "not nice";
    case Niceness::Unknown: return "unknown";
  }
  return "?";
}

NicenessReport classify_niceness(const grp::PermGroup& g, std::uint64_t seed) {
  if (g.degree() < 3) throw degenerate_input("niceness classification requires degree >= 3");
  NicenessReport rep;
  if (!g.family()) rep.caveats.push_back("heart-criterion");
  for (int k = 1; k <= g.degree(); ++k) {
    bool is_k = false;
    try {
      is_k = g.is_k_transitive(k);
    } catch (const resource_limit&) {
      rep.caveats.push_back("transitivity search stopped at k = " + std::to_string(k - 1));
      break;
    }
    if (!is_k) break;
    rep.transitivity_degree = k;
  }

  const bool order_three_on_three = g.degree() == 3 && g.order() == 3;
  if (!order_three_on_three && rep.transitivity_degree < 2) {
    rep.verdict = Niceness::NotNice;
    rep.detail = "the action is not doubly transitive";
    return rep;
  }
  try {
    rep.heart = simplicity(heart_module(g), seed);
  } catch (const inconclusive& e) {
    rep.verdict = Niceness::Unknown;
    rep.detail = e.what();
    return rep;
  }
  if (order_three_on_three) {
    rep.verdict = Niceness::NiceNotVeryNice;
    rep.detail = "order 3 acting on 3 points";
  } else if (rep.heart->absolutely_simple) {
    rep.verdict = Niceness::VeryNice;
    rep.detail = "heart is absolutely simple";
  } else if (rep.heart->simple) {
    rep.verdict = Niceness::NiceNotVeryNice;
    rep.detail = "heart is simple with endomorphism dimension " +
                 std::to_string(rep.heart->endomorphism_dimension);
  } else {
    rep.verdict = Niceness::NotNice;
    rep.detail = "heart has a proper invariant subspace";
  }
  return rep;
}

}  // namespace homzero::f2
