#include "homzero/certify.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "homzero/disjoint.hpp"
#include "homzero/errors.hpp"
#include "homzero/niceness.hpp"
#include "homzero/numeric.hpp"
#include "homzero/padic.hpp"

namespace homzero::certify {

namespace {

const char* const kCiteEndo =
    "trivial-endomorphism theorem: an irreducible polynomial f of degree n >= 5 "
    "(n >= 9 in positive characteristic) without multiple roots, whose Galois group is the full "
    "symmetric or alternating group on the roots, has End(J(C_f)) = Z; in particular J(C_f) is "
    "not supersingular";

const char* const kCiteMain =
    "main theorem: for irreducible f, h without multiple roots, deg f = n >= 3, deg h = m >= 3, "
    "splitting fields linearly disjoint, Gal(h) in {A_m, S_m}, and Gal(f) = S_n or "
    "(Gal(f) = A_n with n >= 5), every homomorphism between J(C_f) and J(C_h) vanishes "
    "(n >= 9 and both squarefree in positive characteristic)";

const char* const kCiteNneM =
    "distinct-degree corollary: for irreducible f, h without multiple roots, deg f = n >= 5, "
    "deg h = m >= 3 (n >= 9 in positive characteristic), Gal(h) in {A_m, S_m}, "
    "Gal(f) in {S_n, A_n}, and n != m or (Gal(f) = S_n and Gal(h) = A_m), "
    "Hom(J(C_f), J(C_h)) = 0 = Hom(J(C_h), J(C_f))";

const char* const kCiteNeqM =
    "equal-degree corollary: for n >= 5, n != 6, and irreducible f, h of degree n with Galois "
    "groups among {S_n, A_n} and non-isomorphic root fields K[x]/f and K[x]/h, every "
    "homomorphism between J(C_f) and J(C_h) vanishes";

const char* const kCiteMgood =
    "very-nice-by-nice theorem: for irreducible f, h without multiple roots of degrees >= 3 "
    "with linearly disjoint splitting fields, f very nice and h nice, either "
    "Hom(J(C_f), J(C_h)) = 0 = Hom(J(C_h), J(C_f)) or the characteristic is positive and both "
    "jacobians are supersingular";

const char* const kCiteDisjoint =
    "disjoint-groups proposition: the very-nice-by-nice conclusion holds when Gal(f) and Gal(h) "
    "are disjoint (no isomorphic nontrivial quotients), since disjointness makes the compositum "
    "realize the full direct product, hence the splitting fields linearly disjoint";

const char* const kCiteProjectiveEndo =
    "projective-family endomorphism fact (recorded as an assertion): for the standard "
    "function-field models with Galois group PSL(d, q) or PGL(d, q) acting on the "
    "(q^d - 1)/(q - 1) points of the projective space, End(J) = Z whenever (q, d) != (3, 4)";

const char* const kCiteAssertion =
    "caller-supplied Galois assignment, taken on faith and flagged as conditional";

std::string theorem_phrase(TheoremId id) {
  switch (id) {
    case TheoremId::ThmMain: return "main theorem";
    case TheoremId::CorNneM: return "distinct-degree corollary";
    case TheoremId::CorNeqM: return "equal-degree corollary";
    case TheoremId::ThmMgood: return "very-nice-by-nice theorem";
    case TheoremId::PropDisjoint: return "disjoint-groups proposition";
  }
  return "?";
}

bool hypothesis_ok(const Hypothesis& h) {
  return h.status == HypothesisStatus::Proven || h.status == HypothesisStatus::Asserted;
}

bool proven_sn_or_an(const galois::GaloisVerdict& v) {
  return v.status == galois::GaloisStatus::SnProven || v.status == galois::GaloisStatus::AnProven;
}

std::vector<std::string> verdict_witnesses(const std::string& label, const galois::GaloisVerdict& v) {
  std::vector<std::string> out;
  out.push_back(label + " verdict: " + galois::to_string(v.status));
  for (const auto& rule : v.rules_fired) out.push_back(label + " " + rule);
  return out;
}

std::string describe_group(const grp::PermGroup& g) {
  std::string s = g.family() ? g.family()->to_string()
                             : "group of degree " + std::to_string(g.degree());
  return s + ", order " + g.order().get_str();
}

std::vector<std::string> field_evidence_witnesses(const padic::FieldsComparison& cmp) {
  std::vector<std::string> out;
  out.push_back(cmp.detail);
  if (cmp.f_evidence) out.push_back("first input at p = " + std::to_string(cmp.witness_prime) + ": " + cmp.f_evidence->detail);
  if (cmp.h_evidence) out.push_back("second input at p = " + std::to_string(cmp.witness_prime) + ": " + cmp.h_evidence->detail);
  return out;
}

// One theorem route, evaluated hypothesis by hypothesis and abandoned at the
// first one that is neither Proven nor Asserted.
struct RouteAttempt {
  std::string route;
  TheoremId theorem = TheoremId::ThmMain;
  std::vector<Hypothesis> hypotheses;
  bool complete = false;

  // valid only when !complete
  const Hypothesis& blocker() const { return hypotheses.back(); }
};

RouteAttempt try_distinct_degree(const poly::PolyRat& f_role, const galois::GaloisVerdict& vf,
                                 const poly::PolyRat& h_role, const galois::GaloisVerdict& vh,
                                 const std::string& f_name, const std::string& h_name) {
  RouteAttempt a;
  a.theorem = TheoremId::CorNneM;
  a.route = "distinct-degree corollary with f-role " + f_name + ", h-role " + h_name;
  const int n = f_role.degree();
  const int m = h_role.degree();

  Hypothesis gate;
  gate.name = "degrees admissible: deg f = n >= 5, deg h = m >= 3";
  gate.citation = kCiteNneM;
  if (n >= 5) {
    gate.status = HypothesisStatus::Proven;
    gate.witnesses = {"route: " + a.route,
                      "n = " + std::to_string(n) + " >= 5, m = " + std::to_string(m) + " >= 3",
                      "characteristic 0: the positive-characteristic gate n >= 9 is vacuous"};
  } else {
    gate.status = HypothesisStatus::Failed;
    gate.witnesses = {"route: " + a.route, "n = " + std::to_string(n) + " < 5"};
  }
  a.hypotheses.push_back(gate);
  if (!hypothesis_ok(gate)) return a;

  Hypothesis hi;
  hi.name = "(i) Gal(h) = A_m or S_m for h-role " + h_name;
  hi.citation = kCiteNneM;
  if (proven_sn_or_an(vh)) {
    hi.status = HypothesisStatus::Proven;
    hi.witnesses = verdict_witnesses("h-role", vh);
  } else {
    hi.status = HypothesisStatus::Unknown;
    hi.witnesses = {"route: " + a.route, "h-role verdict: " + galois::to_string(vh.status)};
  }
  a.hypotheses.push_back(hi);
  if (!hypothesis_ok(hi)) return a;

  Hypothesis hii;
  hii.name = "(ii) Gal(f) = S_n, or Gal(f) = A_n with n >= 5, for f-role " + f_name;
  hii.citation = kCiteNneM;
  if (proven_sn_or_an(vf)) {
    hii.status = HypothesisStatus::Proven;
    hii.witnesses = verdict_witnesses("f-role", vf);
  } else {
    hii.status = HypothesisStatus::Unknown;
    hii.witnesses = {"route: " + a.route, "f-role verdict: " + galois::to_string(vf.status)};
  }
  a.hypotheses.push_back(hii);
  if (!hypothesis_ok(hii)) return a;

  Hypothesis hiii;
  hiii.name = "(iii) n != m, or Gal(f) = S_n and Gal(h) = A_m";
  hiii.citation = kCiteNneM;
  const bool f_sym = vf.status == galois::GaloisStatus::SnProven;
  const bool h_alt = vh.status == galois::GaloisStatus::AnProven;
  if (n != m) {
    hiii.status = HypothesisStatus::Proven;
    hiii.witnesses = {"degrees n = " + std::to_string(n) + " and m = " + std::to_string(m) + " differ"};
  } else if (f_sym && h_alt) {
    hiii.status = HypothesisStatus::Proven;
    hiii.witnesses = {"equal degrees n = m = " + std::to_string(n) +
                      ", but Gal(f) = S_n and Gal(h) = A_m"};
  } else {
    hiii.status = HypothesisStatus::Failed;
    hiii.witnesses = {"route: " + a.route,
                      "equal degrees n = m = " + std::to_string(n) + " with group pattern (" +
                          galois::to_string(vf.status) + ", " + galois::to_string(vh.status) +
                          "), outside the corollary's equal-degree escape"};
  }
  a.hypotheses.push_back(hiii);
  a.complete = hypothesis_ok(hiii);
  return a;
}

RouteAttempt try_equal_degree(const poly::PolyRat& f, const galois::GaloisVerdict& vf,
                              const poly::PolyRat& h, const galois::GaloisVerdict& vh,
                              int prime_budget, const std::string& f_name,
                              const std::string& h_name) {
  RouteAttempt a;
  a.theorem = TheoremId::CorNeqM;
  a.route = "equal-degree corollary for f = " + f_name + ", h = " + h_name;
  const int n = f.degree();
  const int m = h.degree();

  Hypothesis gate;
  gate.name = "degrees admissible: deg f = deg h = n >= 5 and n != 6";
  gate.citation = kCiteNeqM;
  if (n == m && n >= 5 && n != 6) {
    gate.status = HypothesisStatus::Proven;
    gate.witnesses = {"route: " + a.route, "n = m = " + std::to_string(n) + ", n >= 5, n != 6"};
  } else {
    gate.status = HypothesisStatus::Failed;
    gate.witnesses = {"route: " + a.route};
    if (n != m) {
      gate.witnesses.push_back("degrees n = " + std::to_string(n) + " and m = " +
                               std::to_string(m) + " differ");
    } else if (n < 5) {
      gate.witnesses.push_back("n = " + std::to_string(n) + " < 5");
    } else {
      gate.witnesses.push_back("n = 6 is excluded");
    }
  }
  a.hypotheses.push_back(gate);
  if (!hypothesis_ok(gate)) return a;

  Hypothesis hi;
  hi.name = "(i) Gal(h) = A_n or S_n for h = " + h_name;
  hi.citation = kCiteNeqM;
  if (proven_sn_or_an(vh)) {
    hi.status = HypothesisStatus::Proven;
    hi.witnesses = verdict_witnesses("h", vh);
  } else {
    hi.status = HypothesisStatus::Unknown;
    hi.witnesses = {"route: " + a.route, "h verdict: " + galois::to_string(vh.status)};
  }
  a.hypotheses.push_back(hi);
  if (!hypothesis_ok(hi)) return a;

  Hypothesis hii;
  hii.name = "(ii) Gal(f) = S_n or A_n for f = " + f_name;
  hii.citation = kCiteNeqM;
  if (proven_sn_or_an(vf)) {
    hii.status = HypothesisStatus::Proven;
    hii.witnesses = verdict_witnesses("f", vf);
  } else {
    hii.status = HypothesisStatus::Unknown;
    hii.witnesses = {"route: " + a.route, "f verdict: " + galois::to_string(vf.status)};
  }
  a.hypotheses.push_back(hii);
  if (!hypothesis_ok(hii)) return a;

  Hypothesis hiii;
  hiii.name = "(iii) the root fields K[x]/f and K[x]/h are not isomorphic";
  hiii.citation = kCiteNeqM;
  const auto cmp = padic::fields_nonisomorphic_evidence(f, h, prime_budget);
  if (cmp.nonisomorphic) {
    hiii.status = HypothesisStatus::Proven;
    hiii.witnesses = field_evidence_witnesses(cmp);
  } else {
    hiii.status = HypothesisStatus::Unknown;
    hiii.witnesses = {"route: " + a.route, cmp.detail};
  }
  a.hypotheses.push_back(hiii);
  a.complete = hypothesis_ok(hiii);
  return a;
}

// The general routes need Galois data beyond a symmetric/alternating verdict:
// every group pattern those verdicts can certify is either already covered by
// the two corollaries or fails group disjointness outright.
Hypothesis general_routes_blocker() {
  Hypothesis h;
  h.name = "splitting fields of f and h linearly disjoint";
  h.status = HypothesisStatus::Unknown;
  h.citation = kCiteMain;
  h.witnesses = {"route: main theorem / very-nice-by-nice theorem",
                 "these routes require asserted Galois data; computed verdicts only certify "
                 "symmetric or alternating groups, and those cases belong to the corollaries"};
  return h;
}

std::vector<std::string> collect_citations(const std::vector<Hypothesis>& hyps) {
  std::vector<std::string> out;
  for (const auto& h : hyps) {
    if (h.citation.empty()) continue;
    bool seen = false;
    for (const auto& c : out) {
      if (c == h.citation) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(h.citation);
  }
  return out;
}

Certificate finalize(Certificate cert, TheoremId id, std::vector<Hypothesis> hyps,
                     Conclusion conclusion, std::string extra_narrative = {}) {
  cert.theorem = id;
  cert.hypotheses = std::move(hyps);
  cert.conclusion = conclusion;
  cert.conditional = false;
  for (const auto& h : cert.hypotheses) {
    if (h.status == HypothesisStatus::Asserted) cert.conditional = true;
  }
  cert.citations = collect_citations(cert.hypotheses);

  std::ostringstream n;
  switch (conclusion) {
    case Conclusion::HomZero:
      n << "HomZero by the " << theorem_phrase(id)
        << ": every homomorphism between the jacobians vanishes, in both directions.";
      break;
    case Conclusion::HomZeroOrBothSupersingular:
      n << "HomZeroOrBothSupersingular by the " << theorem_phrase(id)
        << ": every homomorphism between the jacobians vanishes, unless the characteristic is "
           "positive and both jacobians are supersingular.";
      break;
    case Conclusion::NotApplicable:
      n << "NotApplicable: no certifying route completed.";
      break;
  }
  if (cert.conditional) n << " The conclusion is conditional on the asserted Galois data.";
  if (!extra_narrative.empty()) n << " " << extra_narrative;
  cert.narrative = n.str();
  return cert;
}

std::string blocker_sentence(const RouteAttempt& a) {
  return a.route + " blocked at \"" + a.blocker().name + "\" (" +
         to_string(a.blocker().status) + ")";
}

}  // namespace

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Proven: return "Proven";
    case HypothesisStatus::Asserted: return "Asserted";
    case HypothesisStatus::Failed: return "Failed";
    case HypothesisStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ThmMain: return "ThmMain";
    case TheoremId::CorNneM: return "CorNneM";
    case TheoremId::CorNeqM: return "CorNeqM";
    case TheoremId::ThmMgood: return "ThmMgood";
    case TheoremId::PropDisjoint: return "PropDisjoint";
  }
  return "?";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::HomZero: return "HomZero";
    case Conclusion::HomZeroOrBothSupersingular: return "HomZeroOrBothSupersingular";
    case Conclusion::NotApplicable: return "NotApplicable";
  }
  return "?";
}

Hypothesis check_endo_trivial(const poly::PolyRat& f, const galois::GaloisVerdict& verdict) {
  Hypothesis h;
  h.name = "End(J(C)) = Z for " + poly::to_string(f);
  h.citation = kCiteEndo;
  const int n = f.degree();
  if (n < 5) {
    h.status = HypothesisStatus::Failed;
    h.witnesses = {"degree n = " + std::to_string(n) + " is below the theorem's gate n >= 5"};
    return h;
  }
  if (proven_sn_or_an(verdict)) {
    h.status = HypothesisStatus::Proven;
    h.witnesses = verdict_witnesses("f", verdict);
    h.witnesses.push_back("degree n = " + std::to_string(n) + " >= 5, characteristic 0");
    h.witnesses.push_back("End(J(C)) = Z excludes supersingularity");
  } else {
    h.status = HypothesisStatus::Unknown;
    h.witnesses = {"f verdict: " + galois::to_string(verdict.status) +
                   "; the theorem needs a proven symmetric or alternating group"};
  }
  return h;
}

Hypothesis check_endo_trivial(const GaloisAssertion& assertion, long characteristic) {
  if (characteristic < 0 || characteristic == 1 || characteristic == 2 ||
      (characteristic > 0 && !is_prime(static_cast<std::uint64_t>(characteristic)))) {
    throw degenerate_input("check_endo_trivial: characteristic must be 0 or an odd prime");
  }
  Hypothesis h;
  h.name = "End(J(C)) = Z for " + assertion.subject;
  h.citation = kCiteEndo;
  const int n = assertion.group.degree();
  const Integer full = factorial(static_cast<unsigned long>(n));
  const bool symmetric = assertion.group.order() == full;
  const bool alternating = assertion.group.order() * 2 == full && n >= 2;
  if (!symmetric && !alternating) {
    h.status = HypothesisStatus::Failed;
    h.witnesses = {"asserted group has order " + assertion.group.order().get_str() +
                   ", neither n! nor n!/2 for n = " + std::to_string(n)};
    return h;
  }
  const int gate = characteristic > 0 ? 9 : 5;
  if (n < gate) {
    h.status = HypothesisStatus::Failed;
    h.witnesses = {"degree n = " + std::to_string(n) + " is below the gate n >= " +
                   std::to_string(gate) +
                   (characteristic > 0 ? " for positive characteristic" : "")};
    return h;
  }
  h.status = HypothesisStatus::Asserted;
  h.witnesses = {
      std::string("order ") + assertion.group.order().get_str() + " pins the group to " +
          (symmetric ? "the symmetric group" : "the alternating group (the only index-2 subgroup of S_n)") +
          " of degree " + std::to_string(n),
      "degree n = " + std::to_string(n) + " meets the gate n >= " + std::to_string(gate),
      "irreducibility and squarefreeness of the model are part of the assertion",
      "provenance: " + assertion.provenance};
  return h;
}

Hypothesis check_linear_disjointness(const grp::PermGroup& gf, const grp::PermGroup& gh) {
  Hypothesis h;
  h.name = "splitting fields linearly disjoint, via Galois group disjointness";
  h.citation = kCiteDisjoint;
  const auto r = grp::are_disjoint(gf, gh);
  switch (r.verdict) {
    case grp::DisjointVerdict::Disjoint:
      h.status = HypothesisStatus::Proven;
      h.witnesses = {"groups " + describe_group(gf) + " and " + describe_group(gh) +
                         " are disjoint: " + r.reason,
                     "disjoint Galois groups force the compositum to realize the full direct "
                     "product, so the splitting fields are linearly disjoint"};
      break;
    case grp::DisjointVerdict::NotDisjoint:
      h.status = HypothesisStatus::Unknown;
      h.witnesses = {"groups are not disjoint: " + r.reason,
                     "group disjointness is sufficient but not necessary, so linear disjointness "
                     "stays undecided"};
      break;
    case grp::DisjointVerdict::Unknown:
      h.status = HypothesisStatus::Unknown;
      h.witnesses = {"group comparison inconclusive: " + r.reason};
      break;
  }
  return h;
}

Hypothesis check_linear_disjointness(const poly::PolyRat& f, const galois::GaloisVerdict& vf,
                                     const poly::PolyRat& h, const galois::GaloisVerdict& vh,
                                     int prime_budget) {
  if (f.degree() != h.degree()) {
    throw degenerate_input("check_linear_disjointness: the equal-degree reduction needs equal degrees");
  }
  Hypothesis hyp;
  hyp.name = "linear disjointness via the equal-degree reduction";
  hyp.citation = kCiteNeqM;
  const bool both_symmetric = vf.status == galois::GaloisStatus::SnProven &&
                              vh.status == galois::GaloisStatus::SnProven;
  const bool both_alternating = vf.status == galois::GaloisStatus::AnProven &&
                                vh.status == galois::GaloisStatus::AnProven;
  if (!both_symmetric && !both_alternating) {
    hyp.status = HypothesisStatus::Unknown;
    hyp.witnesses = {"group pattern (" + galois::to_string(vf.status) + ", " +
                     galois::to_string(vh.status) +
                     ") is outside the reduction, which needs both S_n or both A_n"};
    return hyp;
  }
  const auto cmp = padic::fields_nonisomorphic_evidence(f, h, prime_budget);
  if (cmp.nonisomorphic) {
    hyp.status = HypothesisStatus::Proven;
    hyp.witnesses = field_evidence_witnesses(cmp);
    hyp.witnesses.push_back("matching " + std::string(both_symmetric ? "S_n" : "A_n") +
                            " groups with non-isomorphic root fields give linear disjointness "
                            "after the equal-degree reduction");
  } else {
    hyp.status = HypothesisStatus::Unknown;
    hyp.witnesses = {cmp.detail};
  }
  return hyp;
}

Certificate certify_hom_zero(const poly::PolyRat& f, const poly::PolyRat& h,
                             const CertifyOptions& options) {
  if (f.degree() < 3 || h.degree() < 3) {
    throw degenerate_input("certify_hom_zero: both degrees must be at least 3");
  }
  if (!poly::is_squarefree(f) || !poly::is_squarefree(h)) {
    throw degenerate_input("certify_hom_zero: inputs must have no multiple roots");
  }
  if (options.prime_budget < 1) {
    throw degenerate_input("certify_hom_zero: prime budget must be positive");
  }

  Certificate cert;
  cert.f_input = poly::to_string(f);
  cert.h_input = poly::to_string(h);
  cert.characteristic = 0;

  const auto vf = galois::identify_sn_an(f, options.prime_budget);
  const auto vh = galois::identify_sn_an(h, options.prime_budget);

  auto forward = try_distinct_degree(f, vf, h, vh, cert.f_input, cert.h_input);
  if (forward.complete) {
    return finalize(std::move(cert), forward.theorem, std::move(forward.hypotheses),
                    Conclusion::HomZero);
  }
  auto swapped = try_distinct_degree(h, vh, f, vf, cert.h_input, cert.f_input);
  if (swapped.complete) {
    return finalize(std::move(cert), swapped.theorem, std::move(swapped.hypotheses),
                    Conclusion::HomZero,
                    "Roles were swapped: the conclusion is symmetric in f and h.");
  }
  auto equal = try_equal_degree(f, vf, h, vh, options.prime_budget, cert.f_input, cert.h_input);
  if (equal.complete) {
    return finalize(std::move(cert), equal.theorem, std::move(equal.hypotheses),
                    Conclusion::HomZero);
  }

  std::vector<Hypothesis> blockers;
  Hypothesis first = forward.blocker();
  if (swapped.blocker().name != forward.blocker().name ||
      swapped.blocker().status != forward.blocker().status) {
    first.witnesses.push_back("role swap also fails, at \"" + swapped.blocker().name + "\" (" +
                              to_string(swapped.blocker().status) + ")");
  } else {
    first.witnesses.push_back("role swap fails the same way");
  }
  blockers.push_back(std::move(first));
  blockers.push_back(equal.blocker());
  blockers.push_back(general_routes_blocker());

  std::ostringstream extra;
  extra << blocker_sentence(forward) << ". " << blocker_sentence(equal)
        << ". The general routes require asserted Galois data.";
  return finalize(std::move(cert), TheoremId::ThmMain, std::move(blockers),
                  Conclusion::NotApplicable, extra.str());
}

namespace {

Hypothesis asserted_group_hypothesis(const char* role, const GaloisAssertion& a) {
  Hypothesis h;
  h.name = std::string("asserted Galois group for ") + role + " = " + a.subject;
  h.status = HypothesisStatus::Asserted;
  h.citation = kCiteAssertion;
  h.witnesses = {"group " + describe_group(a.group) + " on " + std::to_string(a.group.degree()) +
                     " points",
                 "provenance: " + a.provenance};
  return h;
}

Hypothesis niceness_hypothesis(const char* role, const GaloisAssertion& a, bool need_very_nice,
                               std::uint64_t seed) {
  Hypothesis h;
  h.name = std::string(role) + " = " + a.subject +
           (need_very_nice ? " is very nice (doubly transitive, absolutely simple heart)"
                           : " is nice (heart a simple module)");
  h.citation = kCiteMgood;
  const auto report = f2::classify_niceness(a.group, seed);
  const bool good = need_very_nice ? report.verdict == f2::Niceness::VeryNice
                                   : (report.verdict == f2::Niceness::VeryNice ||
                                      report.verdict == f2::Niceness::NiceNotVeryNice);
  h.witnesses = {"classification of " + describe_group(a.group) + ": " +
                     f2::to_string(report.verdict),
                 "detail: " + report.detail,
                 "transitivity verified up to k = " + std::to_string(report.transitivity_degree)};
  for (const auto& c : report.caveats) h.witnesses.push_back("caveat: " + c);
  if (good) {
    h.status = HypothesisStatus::Proven;
    h.witnesses.push_back("the verdict is computed on the asserted group, so it inherits the "
                          "assertion's conditionality");
  } else if (report.verdict == f2::Niceness::Unknown) {
    h.status = HypothesisStatus::Unknown;
  } else {
    h.status = HypothesisStatus::Failed;
  }
  return h;
}

struct SupersingularExclusion {
  Hypothesis hypothesis;
  bool excluded = false;
};

SupersingularExclusion supersingular_exclusion(const GaloisAssertion& first,
                                               const GaloisAssertion& second,
                                               long characteristic) {
  SupersingularExclusion out;
  Hypothesis& h = out.hypothesis;
  h.name = "supersingularity excluded for at least one jacobian";
  h.citation = kCiteEndo;
  if (characteristic == 0) {
    h.status = HypothesisStatus::Proven;
    h.witnesses = {"characteristic 0: there are no supersingular abelian varieties over a field "
                   "of characteristic zero"};
    out.excluded = true;
    return out;
  }
  for (const GaloisAssertion* a : {&first, &second}) {
    const int n = a->group.degree();
    if (n < 9) continue;
    const Integer full = factorial(static_cast<unsigned long>(n));
    const bool sym_or_alt = a->group.order() == full || a->group.order() * 2 == full;
    if (sym_or_alt) {
      h.status = HypothesisStatus::Asserted;
      h.witnesses = {a->subject + ": asserted symmetric/alternating group of degree " +
                         std::to_string(n) + " >= 9, so End(J) = Z and J is not supersingular",
                     "provenance: " + a->provenance};
      out.excluded = true;
      return out;
    }
    const auto& fam = a->group.family();
    if (fam && (fam->kind == grp::FamilyTag::Kind::ProjectiveSpecial ||
                fam->kind == grp::FamilyTag::Kind::ProjectiveGeneral)) {
      const long d = fam->a;
      const long q = fam->b;
      if (!(q == 3 && d == 4)) {
        h.status = HypothesisStatus::Asserted;
        h.citation = kCiteProjectiveEndo;
        h.witnesses = {a->subject + ": asserted group " + fam->to_string() + " on " +
                           std::to_string(n) + " points with (q, d) = (" + std::to_string(q) +
                           ", " + std::to_string(d) + ") != (3, 4), so End(J) = Z",
                       "provenance: " + a->provenance};
        out.excluded = true;
        return out;
      }
    }
  }
  h.status = HypothesisStatus::Failed;
  h.witnesses = {"characteristic " + std::to_string(characteristic) +
                 " is positive and no asserted group passes an endomorphism gate (degree >= 9 "
                 "with a symmetric/alternating order, or a projective family with "
                 "(q, d) != (3, 4))"};
  return out;
}

}  // namespace

Certificate certify_asserted(const GaloisAssertion& ga, const GaloisAssertion& gh,
                             long characteristic, const CertifyOptions& options) {
  if (characteristic < 0 || characteristic == 1 || characteristic == 2 ||
      (characteristic > 0 && !is_prime(static_cast<std::uint64_t>(characteristic)))) {
    throw degenerate_input("certify_asserted: characteristic must be 0 or an odd prime");
  }
  if (ga.group.degree() < 3 || gh.group.degree() < 3) {
    throw degenerate_input("certify_asserted: asserted groups must act on at least 3 points");
  }

  Certificate cert;
  cert.f_input = ga.subject;
  cert.h_input = gh.subject;
  cert.characteristic = characteristic;

  // Both role orders are tried: the conclusion is symmetric, and only the
  // very-nice side is pinned to the f-role.
  const auto attempt = [&](const GaloisAssertion& f_role, const GaloisAssertion& h_role) {
    RouteAttempt a;
    a.theorem = TheoremId::PropDisjoint;
    a.route = "disjoint-groups proposition with f-role " + f_role.subject + ", h-role " +
              h_role.subject;
    a.hypotheses.push_back(asserted_group_hypothesis("f", f_role));
    a.hypotheses.push_back(asserted_group_hypothesis("h", h_role));

    auto vnice = niceness_hypothesis("f", f_role, true, options.seed);
    a.hypotheses.push_back(vnice);
    if (!hypothesis_ok(vnice)) return a;

    auto nice = niceness_hypothesis("h", h_role, false, options.seed);
    a.hypotheses.push_back(nice);
    if (!hypothesis_ok(nice)) return a;

    auto disjoint = check_linear_disjointness(f_role.group, h_role.group);
    a.hypotheses.push_back(disjoint);
    a.complete = hypothesis_ok(disjoint);
    return a;
  };

  auto forward = attempt(ga, gh);
  auto chosen = std::move(forward);
  std::string swap_note;
  if (!chosen.complete) {
    auto swapped = attempt(gh, ga);
    if (swapped.complete) {
      chosen = std::move(swapped);
      swap_note = "Roles were swapped: the conclusion is symmetric in f and h.";
    }
  }

  if (!chosen.complete) {
    std::ostringstream extra;
    extra << blocker_sentence(chosen) << ". The role swap does not complete either.";
    return finalize(std::move(cert), TheoremId::PropDisjoint, std::move(chosen.hypotheses),
                    Conclusion::NotApplicable, extra.str());
  }

  auto exclusion = supersingular_exclusion(ga, gh, characteristic);
  auto hyps = std::move(chosen.hypotheses);
  hyps.push_back(exclusion.hypothesis);
  const Conclusion conclusion =
      exclusion.excluded ? Conclusion::HomZero : Conclusion::HomZeroOrBothSupersingular;
  return finalize(std::move(cert), TheoremId::PropDisjoint, std::move(hyps), conclusion,
                  swap_note);
}

std::string to_json(const Certificate& c) {
  nlohmann::json j;
  j["inputs"] = {{"f", c.f_input}, {"h", c.h_input}};
  j["theorem"] = to_string(c.theorem);
  j["conclusion"] = to_string(c.conclusion);
  j["characteristic"] = c.characteristic;
  j["conditional"] = c.conditional;
  auto hyps = nlohmann::json::array();
  std::vector<std::string> all_witnesses;
  for (const auto& h : c.hypotheses) {
    hyps.push_back({{"name", h.name},
                    {"status", to_string(h.status)},
                    {"witnesses", h.witnesses},
                    {"citation", h.citation}});
    all_witnesses.insert(all_witnesses.end(), h.witnesses.begin(), h.witnesses.end());
  }
  j["hypotheses"] = std::move(hyps);
  j["witnesses"] = std::move(all_witnesses);
  j["paper_citations"] = c.citations;
  j["narrative"] = c.narrative;
  return j.dump(2) + "\n";
}

}  // namespace homzero::certify
