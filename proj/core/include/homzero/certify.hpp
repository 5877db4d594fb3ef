#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homzero/f2_module.hpp"
#include "homzero/galois.hpp"
#include "homzero/perm_group.hpp"
#include "homzero/poly_rat.hpp"

namespace homzero::certify {

// Proven   verified computationally in this run
// Asserted rests on caller-supplied data taken on faith (group assignments,
//          literature facts); taints the certificate as conditional
// Failed   verified to be violated; the theorem cannot apply to this input
// Unknown  the check ran out of evidence without deciding either way
enum class HypothesisStatus { Proven, Asserted, Failed, Unknown };

std::string to_string(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::Unknown;
  std::vector<std::string> witnesses;  // the evidence lines backing `status`
  std::string citation;                // statement of the result being invoked
};

enum class TheoremId { ThmMain, CorNneM, CorNeqM, ThmMgood, PropDisjoint };

std::string to_string(TheoremId id);

// HomZero                     Hom(J(C_f), J(C_h)) = 0 in both directions
// HomZeroOrBothSupersingular  same, except possibly both jacobians are
//                             supersingular (positive characteristic only)
// NotApplicable               no route's hypotheses could all be established
enum class Conclusion { HomZero, HomZeroOrBothSupersingular, NotApplicable };

std::string to_string(Conclusion c);

struct Certificate {
  std::string f_input;
  std::string h_input;
  TheoremId theorem = TheoremId::ThmMain;
  std::vector<Hypothesis> hypotheses;
  Conclusion conclusion = Conclusion::NotApplicable;
  long characteristic = 0;
  // True when any hypothesis is merely Asserted: the conclusion holds only
  // relative to the caller's assertions.
  bool conditional = false;
  std::string narrative;
  std::vector<std::string> citations;  // deduplicated, in first-use order
};

// Canonical JSON rendering: keys sorted, two-space indent, byte-stable
// across runs for identical inputs. Schema in docs/certificate.schema.json.
std::string to_json(const Certificate& c);

// Caller-supplied Galois group for a polynomial the library cannot (or
// should not) analyze itself, e.g. function-field data. `subject` names the
// polynomial, `provenance` says where the assignment comes from.
struct GaloisAssertion {
  std::string subject;
  grp::PermGroup group;
  std::string provenance;
};

struct CertifyOptions {
  int prime_budget = 100;
  std::uint64_t seed = f2::kDefaultSimplicitySeed;
};

// End(J(C_f)) = Z from a computed verdict, characteristic zero: Proven when
// deg f >= 5 and the verdict is Sn or An, Failed when deg f < 5, Unknown
// otherwise. The conclusion excludes supersingularity.
Hypothesis check_endo_trivial(const poly::PolyRat& f, const galois::GaloisVerdict& verdict);

// Same conclusion from an asserted group over a field of the given
// characteristic (0 or an odd prime). Asserted when the group's order pins
// it to the symmetric or alternating group of its degree and the degree gate
// (>= 5, or >= 9 in positive characteristic) holds; Failed otherwise.
Hypothesis check_endo_trivial(const GaloisAssertion& assertion, long characteristic);

// Linear disjointness of the splitting fields from group disjointness:
// disjoint Galois groups force the compositum to realize the direct
// product. Proven on a Disjoint verdict, Unknown otherwise (group
// disjointness is sufficient, not necessary).
Hypothesis check_linear_disjointness(const grp::PermGroup& gf, const grp::PermGroup& gh);

// Equal-degree reduction: Proven when both verdicts land on the same group
// pattern (both Sn or both An) and the root fields are proved
// non-isomorphic by local evidence within the prime budget. Pre: equal
// degrees.
Hypothesis check_linear_disjointness(const poly::PolyRat& f, const galois::GaloisVerdict& vf,
                                     const poly::PolyRat& h, const galois::GaloisVerdict& vh,
                                     int prime_budget);

// Certifies Hom(J(C_f), J(C_h)) = 0 = Hom(J(C_h), J(C_f)) over Q for
// squarefree f, h of degree >= 3. Tries the distinct-degree route (either
// role order), then the equal-degree route; when no route completes, the
// certificate lists each route's first failing hypothesis and concludes
// NotApplicable. Throws degenerate_input on degree < 3, multiple roots, or
// a non-positive prime budget.
Certificate certify_hom_zero(const poly::PolyRat& f, const poly::PolyRat& h,
                             const CertifyOptions& options = {});

// Same question for asserted Galois data over a field of characteristic 0
// or an odd prime: checks one group very nice and the other nice (trying
// both role orders), group disjointness, and the supersingularity
// exclusion. Always conditional on the assertions. Throws degenerate_input
// on characteristic 1, 2, negative, or composite.
Certificate certify_asserted(const GaloisAssertion& ga, const GaloisAssertion& gh,
                             long characteristic, const CertifyOptions& options = {});

}  // namespace homzero::certify
