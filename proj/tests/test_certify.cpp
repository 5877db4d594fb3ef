#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "homzero/certify.hpp"
#include "homzero/errors.hpp"
#include "homzero/families.hpp"
#include "homzero/galois.hpp"
#include "homzero/numeric.hpp"
#include "homzero/poly_rat.hpp"

using homzero::Rational;
using homzero::degenerate_input;
using homzero::poly::PolyRat;
using homzero::galois::GaloisStatus;
using homzero::galois::GaloisVerdict;
using homzero::certify::Certificate;
using homzero::certify::CertifyOptions;
using homzero::certify::Conclusion;
using homzero::certify::GaloisAssertion;
using homzero::certify::Hypothesis;
using homzero::certify::HypothesisStatus;
using homzero::certify::TheoremId;
using homzero::certify::certify_asserted;
using homzero::certify::certify_hom_zero;
using homzero::certify::check_endo_trivial;
using homzero::certify::check_linear_disjointness;
using homzero::certify::to_json;

namespace {

PolyRat P(const std::vector<long>& coeffs) { return PolyRat::from_integers(coeffs); }

PolyRat truncated_exp(int n) {
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) {
    c.push_back(Rational(1) / Rational(homzero::factorial(static_cast<unsigned long>(i))));
  }
  return PolyRat(c);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

bool some_witness_contains(const Hypothesis& h, const std::string& needle) {
  return std::any_of(h.witnesses.begin(), h.witnesses.end(),
                     [&](const std::string& w) { return contains(w, needle); });
}

bool some_hypothesis_witness_contains(const Certificate& c, const std::string& needle) {
  return std::any_of(c.hypotheses.begin(), c.hypotheses.end(),
                     [&](const Hypothesis& h) { return some_witness_contains(h, needle); });
}

bool hypothesis_ok(const Hypothesis& h) {
  return h.status == HypothesisStatus::Proven || h.status == HypothesisStatus::Asserted;
}

const PolyRat kCubicSn = P({-1, -1, 0, 1});      // x^3 - x - 1
const PolyRat kCubicAn = P({-1, -3, 0, 1});      // x^3 - 3x - 1
const PolyRat kQuarticSn = P({-1, -1, 0, 0, 1});  // x^4 - x - 1
const PolyRat kQuinticSn = P({-1, -1, 0, 0, 0, 1});
const PolyRat kQuinticAn = P({16, 20, 0, 0, 0, 1});
const PolyRat kSepticSn = P({-1, -1, 0, 0, 0, 0, 0, 1});

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("trivial endomorphism hypothesis from computed verdicts") {
  const auto v5 = homzero::galois::identify_sn_an(kQuinticSn, 100);
  auto proven = check_endo_trivial(kQuinticSn, v5);
  CHECK(proven.status == HypothesisStatus::Proven);
  CHECK(contains(proven.name, "x^5 - x - 1"));
  CHECK(some_witness_contains(proven, "excludes supersingularity"));
  CHECK(some_witness_contains(proven, "Sn proven"));
  CHECK(!proven.citation.empty());

  const auto va = homzero::galois::identify_sn_an(kQuinticAn, 100);
  REQUIRE(va.status == GaloisStatus::AnProven);
  CHECK(check_endo_trivial(kQuinticAn, va).status == HypothesisStatus::Proven);

  const auto v3 = homzero::galois::identify_sn_an(kCubicSn, 100);
  auto low = check_endo_trivial(kCubicSn, v3);
  CHECK(low.status == HypothesisStatus::Failed);
  CHECK(some_witness_contains(low, "below the theorem's gate"));

  CHECK(check_endo_trivial(kQuarticSn, homzero::galois::identify_sn_an(kQuarticSn, 100)).status ==
        HypothesisStatus::Failed);

  auto unresolved = check_endo_trivial(kQuinticSn, GaloisVerdict{});
  CHECK(unresolved.status == HypothesisStatus::Unknown);
  CHECK(some_witness_contains(unresolved, "proven symmetric or alternating group"));
}

TEST_CASE("trivial endomorphism hypothesis from asserted groups") {
  const GaloisAssertion s9{"f9", homzero::grp::symmetric_group(9), "assigned by hand"};
  auto h = check_endo_trivial(s9, 7);
  CHECK(h.status == HypothesisStatus::Asserted);
  CHECK(some_witness_contains(h, "pins the group to the symmetric group"));
  CHECK(some_witness_contains(h, "provenance: assigned by hand"));

  const GaloisAssertion a9{"g9", homzero::grp::alternating_group(9), "catalogue"};
  auto ha = check_endo_trivial(a9, 3);
  CHECK(ha.status == HypothesisStatus::Asserted);
  CHECK(some_witness_contains(ha, "alternating group"));

  const GaloisAssertion s7{"f7", homzero::grp::symmetric_group(7), "hand"};
  auto gate = check_endo_trivial(s7, 7);
  CHECK(gate.status == HypothesisStatus::Failed);
  CHECK(some_witness_contains(gate, "gate n >= 9"));
  CHECK(check_endo_trivial(s7, 0).status == HypothesisStatus::Asserted);

  const GaloisAssertion c9{"f_c9", homzero::grp::cyclic_group(9), "hand"};
  auto wrong = check_endo_trivial(c9, 7);
  CHECK(wrong.status == HypothesisStatus::Failed);
  CHECK(some_witness_contains(wrong, "neither n! nor n!/2"));

  CHECK_THROWS_AS((void)check_endo_trivial(s9, 2), degenerate_input);
  CHECK_THROWS_AS((void)check_endo_trivial(s9, 1), degenerate_input);
  CHECK_THROWS_AS((void)check_endo_trivial(s9, -3), degenerate_input);
  CHECK_THROWS_AS((void)check_endo_trivial(s9, 9), degenerate_input);
}

TEST_CASE("linear disjointness hypotheses") {
  auto fields = check_linear_disjointness(homzero::grp::symmetric_group(3),
                                          homzero::grp::alternating_group(3));
  CHECK(fields.status == HypothesisStatus::Proven);
  CHECK(some_witness_contains(fields, "linearly disjoint"));

  auto shared = check_linear_disjointness(homzero::grp::symmetric_group(3),
                                          homzero::grp::symmetric_group(4));
  CHECK(shared.status == HypothesisStatus::Unknown);
  CHECK(some_witness_contains(shared, "not disjoint"));

  CHECK(check_linear_disjointness(homzero::grp::projective_special_group(2, 5),
                                  homzero::grp::projective_general_group(2, 5))
            .status == HypothesisStatus::Proven);

  const auto v7 = homzero::galois::identify_sn_an(kSepticSn, 100);
  const auto exp7 = truncated_exp(7);
  const auto vexp = homzero::galois::identify_sn_an(exp7, 100);
  REQUIRE(v7.status == GaloisStatus::SnProven);
  REQUIRE(vexp.status == GaloisStatus::SnProven);

  auto reduced = check_linear_disjointness(kSepticSn, v7, exp7, vexp, 100);
  CHECK(reduced.status == HypothesisStatus::Proven);
  CHECK(some_witness_contains(reduced, "at p = 2"));
  CHECK(some_witness_contains(reduced, "equal-degree reduction"));

  const auto v5 = homzero::galois::identify_sn_an(kQuinticSn, 100);
  const auto va = homzero::galois::identify_sn_an(kQuinticAn, 100);
  auto mixed = check_linear_disjointness(kQuinticSn, v5, kQuinticAn, va, 100);
  CHECK(mixed.status == HypothesisStatus::Unknown);
  CHECK(some_witness_contains(mixed, "outside the reduction"));

  auto same = check_linear_disjointness(kSepticSn, v7, kSepticSn, v7, 100);
  CHECK(same.status == HypothesisStatus::Unknown);
  CHECK(some_witness_contains(same, "no witness prime"));

  CHECK_THROWS_AS((void)check_linear_disjointness(kQuinticSn, v5, kSepticSn, v7, 100),
                  degenerate_input);
}

TEST_CASE("distinct-degree certificates") {
  auto cert = certify_hom_zero(kQuinticSn, kSepticSn);
  CHECK(cert.theorem == TheoremId::CorNneM);
  CHECK(cert.conclusion == Conclusion::HomZero);
  CHECK(!cert.conditional);
  CHECK(cert.characteristic == 0);
  CHECK(cert.f_input == "x^5 - x - 1");
  CHECK(cert.h_input == "x^7 - x - 1");
  REQUIRE(cert.hypotheses.size() == 4);
  for (const auto& h : cert.hypotheses) CHECK(h.status == HypothesisStatus::Proven);
  CHECK(contains(cert.hypotheses[0].name, "degrees admissible"));
  CHECK(contains(cert.hypotheses[1].name, "(i)"));
  CHECK(contains(cert.hypotheses[2].name, "(ii)"));
  CHECK(contains(cert.hypotheses[3].name, "(iii)"));
  CHECK(contains(cert.narrative, "HomZero by the distinct-degree corollary"));
  CHECK(!cert.citations.empty());

  auto swapped = certify_hom_zero(kCubicSn, kSepticSn);
  CHECK(swapped.theorem == TheoremId::CorNneM);
  CHECK(swapped.conclusion == Conclusion::HomZero);
  CHECK(contains(swapped.narrative, "Roles were swapped"));

  // Equal degrees, symmetric against alternating: the escape clause fires.
  auto escape = certify_hom_zero(kQuinticSn, kQuinticAn);
  CHECK(escape.theorem == TheoremId::CorNneM);
  CHECK(escape.conclusion == Conclusion::HomZero);
  CHECK(some_witness_contains(escape.hypotheses[3], "Gal(f) = S_n and Gal(h) = A_m"));

  auto escape_swapped = certify_hom_zero(kQuinticAn, kQuinticSn);
  CHECK(escape_swapped.conclusion == Conclusion::HomZero);
  CHECK(contains(escape_swapped.narrative, "Roles were swapped"));

  // Degree 5 against a cubic with square discriminant: A_3 in the h-role.
  auto with_cubic = certify_hom_zero(kQuinticSn, kCubicAn);
  CHECK(with_cubic.theorem == TheoremId::CorNneM);
  CHECK(with_cubic.conclusion == Conclusion::HomZero);
}

TEST_CASE("equal-degree certificates") {
  auto cert = certify_hom_zero(kSepticSn, truncated_exp(7));
  CHECK(cert.theorem == TheoremId::CorNeqM);
  CHECK(cert.conclusion == Conclusion::HomZero);
  CHECK(!cert.conditional);
  REQUIRE(cert.hypotheses.size() == 4);
  for (const auto& h : cert.hypotheses) CHECK(h.status == HypothesisStatus::Proven);
  CHECK(contains(cert.hypotheses[3].name, "root fields"));
  CHECK(some_witness_contains(cert.hypotheses[3], "at p = 2"));
  CHECK(contains(cert.narrative, "HomZero by the equal-degree corollary"));

  auto quintics = certify_hom_zero(kQuinticSn, truncated_exp(5));
  CHECK(quintics.theorem == TheoremId::CorNeqM);
  CHECK(quintics.conclusion == Conclusion::HomZero);
}

TEST_CASE("inapplicable pairs") {
  auto cert = certify_hom_zero(kQuinticSn, kQuinticSn);
  CHECK(cert.theorem == TheoremId::ThmMain);
  CHECK(cert.conclusion == Conclusion::NotApplicable);
  CHECK(!cert.conditional);
  REQUIRE(cert.hypotheses.size() == 3);
  CHECK(cert.hypotheses[0].status == HypothesisStatus::Failed);
  CHECK(contains(cert.hypotheses[0].name, "(iii)"));
  CHECK(some_witness_contains(cert.hypotheses[0], "role swap fails the same way"));
  CHECK(cert.hypotheses[1].status == HypothesisStatus::Unknown);
  CHECK(contains(cert.hypotheses[1].name, "root fields"));
  CHECK(cert.hypotheses[2].status == HypothesisStatus::Unknown);
  CHECK(contains(cert.hypotheses[2].name, "linearly disjoint"));
  CHECK(contains(cert.narrative, "no certifying route completed"));
  CHECK(contains(cert.narrative, "blocked at"));
  CHECK(some_hypothesis_witness_contains(cert, "asserted Galois data"));

  // Provable by hand via disjoint groups (S4 and C3), but the polynomial
  // pipeline stops at the two corollaries and must say so honestly.
  auto small = certify_hom_zero(kQuarticSn, kCubicAn);
  CHECK(small.conclusion == Conclusion::NotApplicable);
  CHECK(small.hypotheses[0].status == HypothesisStatus::Failed);
  CHECK(contains(small.hypotheses[0].name, "degrees admissible"));

  auto cubics = certify_hom_zero(kCubicSn, kCubicAn);
  CHECK(cubics.conclusion == Conclusion::NotApplicable);

  CHECK_THROWS_AS((void)certify_hom_zero(P({-1, 0, 1}), kQuinticSn), degenerate_input);
  CHECK_THROWS_AS((void)certify_hom_zero(P({0, 1, 2, 1}), kQuinticSn), degenerate_input);
  CertifyOptions no_budget;
  no_budget.prime_budget = 0;
  CHECK_THROWS_AS((void)certify_hom_zero(kQuinticSn, kSepticSn, no_budget), degenerate_input);
}

TEST_CASE("soundness and symmetry sweep") {
  const std::vector<std::pair<PolyRat, PolyRat>> pairs = {
      {kQuinticSn, kSepticSn},    {kSepticSn, truncated_exp(7)}, {kQuinticSn, kQuinticSn},
      {kCubicSn, kSepticSn},      {kQuarticSn, kCubicAn},        {kCubicSn, kCubicAn},
      {kQuinticSn, kQuinticAn},   {kQuinticSn, truncated_exp(5)}};
  for (const auto& [f, h] : pairs) {
    const auto forward = certify_hom_zero(f, h);
    const auto reverse = certify_hom_zero(h, f);
    CHECK(forward.conclusion == reverse.conclusion);
    CHECK(forward.theorem == reverse.theorem);
    CHECK(!forward.conditional);
    if (forward.conclusion == Conclusion::HomZero) {
      for (const auto& hyp : forward.hypotheses) CHECK(hypothesis_ok(hyp));
    } else {
      CHECK(forward.conclusion == Conclusion::NotApplicable);
      CHECK(std::any_of(forward.hypotheses.begin(), forward.hypotheses.end(),
                        [](const Hypothesis& hyp) { return !hypothesis_ok(hyp); }));
    }
    CHECK(!forward.narrative.empty());
    CHECK(!forward.citations.empty());
  }
}

TEST_CASE("asserted-data certificates") {
  const GaloisAssertion psl211{"f_p11", homzero::grp::projective_special_group(2, 11),
                               "function-field model"};
  const GaloisAssertion pgl211{"h_p11", homzero::grp::projective_general_group(2, 11),
                               "function-field model"};
  auto cert = certify_asserted(psl211, pgl211, 11);
  CHECK(cert.theorem == TheoremId::PropDisjoint);
  CHECK(cert.conclusion == Conclusion::HomZero);
  CHECK(cert.conditional);
  CHECK(cert.characteristic == 11);
  CHECK(some_hypothesis_witness_contains(cert, "(q, d) = (11, 2)"));
  CHECK(contains(cert.narrative, "Roles were swapped"));
  CHECK(std::any_of(cert.hypotheses.begin(), cert.hypotheses.end(),
                    [](const Hypothesis& h) { return contains(h.name, "very nice"); }));
  for (const auto& h : cert.hypotheses) CHECK(hypothesis_ok(h));
  CHECK(certify_asserted(pgl211, psl211, 11).conclusion == Conclusion::HomZero);

  // On 21 points the permutation module of either projective group contains
  // the binary code of the plane's lines (dimension 10, all-ones included),
  // leaving a 9-dimensional invariant subspace inside the 20-dimensional
  // heart. Neither group is nice, so no route applies.
  const GaloisAssertion psl34{"f34", homzero::grp::projective_special_group(3, 4),
                              "function-field model"};
  const GaloisAssertion pgl34{"h34", homzero::grp::projective_general_group(3, 4),
                              "function-field model"};
  auto plane = certify_asserted(psl34, pgl34, 7);
  CHECK(plane.theorem == TheoremId::PropDisjoint);
  CHECK(plane.conclusion == Conclusion::NotApplicable);
  CHECK(plane.conditional);
  CHECK(plane.hypotheses.back().status == HypothesisStatus::Failed);
  CHECK(contains(plane.hypotheses.back().name, "very nice"));
  CHECK(some_witness_contains(plane.hypotheses.back(), "proper invariant subspace"));
  CHECK(certify_asserted(pgl34, psl34, 7).conclusion == Conclusion::NotApplicable);

  const GaloisAssertion psl25{"f25", homzero::grp::projective_special_group(2, 5),
                              "function-field model"};
  const GaloisAssertion pgl25{"h25", homzero::grp::projective_general_group(2, 5),
                              "function-field model"};
  auto low = certify_asserted(psl25, pgl25, 5);
  CHECK(low.theorem == TheoremId::PropDisjoint);
  CHECK(low.conclusion == Conclusion::HomZeroOrBothSupersingular);
  CHECK(low.conditional);
  CHECK(contains(low.narrative, "Roles were swapped"));
  REQUIRE(!low.hypotheses.empty());
  CHECK(low.hypotheses.back().status == HypothesisStatus::Failed);
  CHECK(some_witness_contains(low.hypotheses.back(), "no asserted group passes"));

  auto char_zero = certify_asserted(psl25, pgl25, 0);
  CHECK(char_zero.conclusion == Conclusion::HomZero);
  CHECK(char_zero.conditional);
  CHECK(some_hypothesis_witness_contains(char_zero, "characteristic 0"));

  const GaloisAssertion psl25_again{"f25b", homzero::grp::projective_special_group(2, 5),
                                    "function-field model"};
  auto equal = certify_asserted(psl25, psl25_again, 5);
  CHECK(equal.conclusion == Conclusion::NotApplicable);
  CHECK(std::any_of(equal.hypotheses.begin(), equal.hypotheses.end(),
                    [](const Hypothesis& h) { return h.status == HypothesisStatus::Failed; }));

  const GaloisAssertion pgl25_again{"h25b", homzero::grp::projective_general_group(2, 5),
                                    "function-field model"};
  auto twins = certify_asserted(pgl25, pgl25_again, 5);
  CHECK(twins.conclusion == Conclusion::NotApplicable);
  CHECK(some_hypothesis_witness_contains(twins, "share themselves"));

  const GaloisAssertion s9{"f9", homzero::grp::symmetric_group(9), "hand"};
  const GaloisAssertion a5{"h5", homzero::grp::alternating_group(5), "hand"};
  auto classical = certify_asserted(s9, a5, 3);
  CHECK(classical.conclusion == Conclusion::HomZero);
  CHECK(classical.conditional);
  CHECK(some_hypothesis_witness_contains(classical, "End(J) = Z"));

  CHECK_THROWS_AS((void)certify_asserted(psl25, pgl25, 2), degenerate_input);
  CHECK_THROWS_AS((void)certify_asserted(psl25, pgl25, 1), degenerate_input);
  CHECK_THROWS_AS((void)certify_asserted(psl25, pgl25, -5), degenerate_input);
  CHECK_THROWS_AS((void)certify_asserted(psl25, pgl25, 9), degenerate_input);
  const GaloisAssertion tiny{"t", homzero::grp::cyclic_group(2), "hand"};
  CHECK_THROWS_AS((void)certify_asserted(tiny, pgl25, 5), degenerate_input);
}

TEST_CASE("json rendering is byte-stable and well-formed") {
  const auto cert = certify_hom_zero(kQuinticSn, kSepticSn);
  const auto j1 = to_json(cert);
  const auto j2 = to_json(certify_hom_zero(kQuinticSn, kSepticSn));
  CHECK(j1 == j2);
  CHECK(!j1.empty());
  CHECK(j1.back() == '\n');

  const auto parsed = nlohmann::json::parse(j1);
  CHECK(parsed.at("theorem") == "CorNneM");
  CHECK(parsed.at("conclusion") == "HomZero");
  CHECK(parsed.at("conditional") == false);
  CHECK(parsed.at("characteristic") == 0);
  CHECK(parsed.at("inputs").at("f") == "x^5 - x - 1");
  CHECK(parsed.at("inputs").at("h") == "x^7 - x - 1");
  REQUIRE(parsed.at("hypotheses").is_array());
  CHECK(parsed.at("hypotheses").size() == 4);
  for (const auto& h : parsed.at("hypotheses")) {
    CHECK(h.contains("name"));
    CHECK(h.contains("status"));
    CHECK(h.contains("witnesses"));
    CHECK(h.contains("citation"));
    const std::string status = h.at("status");
    CHECK((status == "Proven" || status == "Asserted" || status == "Failed" ||
           status == "Unknown"));
  }
  CHECK(parsed.at("paper_citations").is_array());
  CHECK(!parsed.at("paper_citations").empty());
  CHECK(parsed.at("witnesses").is_array());
  CHECK(!parsed.at("witnesses").empty());
  CHECK(parsed.at("narrative").is_string());

  const GaloisAssertion psl25{"f25", homzero::grp::projective_special_group(2, 5), "model"};
  const GaloisAssertion pgl25{"h25", homzero::grp::projective_general_group(2, 5), "model"};
  const auto a1 = to_json(certify_asserted(psl25, pgl25, 5));
  const auto a2 = to_json(certify_asserted(psl25, pgl25, 5));
  CHECK(a1 == a2);
  const auto asserted = nlohmann::json::parse(a1);
  CHECK(asserted.at("theorem") == "PropDisjoint");
  CHECK(asserted.at("conclusion") == "HomZeroOrBothSupersingular");
  CHECK(asserted.at("conditional") == true);
  CHECK(asserted.at("characteristic") == 5);

  const auto na = nlohmann::json::parse(to_json(certify_hom_zero(kQuinticSn, kQuinticSn)));
  CHECK(na.at("conclusion") == "NotApplicable");
  CHECK(na.at("hypotheses").size() == 3);
}

}  // TEST_SUITE("certify")
