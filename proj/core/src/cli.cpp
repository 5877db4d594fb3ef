#include "homzero/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homzero/certify.hpp"
#include "homzero/disjoint.hpp"
#include "homzero/errors.hpp"
#include "homzero/families.hpp"
#include "homzero/galois.hpp"
#include "homzero/niceness.hpp"
#include "homzero/padic.hpp"

namespace homzero::cli {
namespace {

using nlohmann::json;

constexpr long kExponentCap = 512;
constexpr long kParsedDegreeCap = 4096;

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// expr := term (('+'|'-') term)*
// term := factor (('*'|'/') factor)*
// factor := ('+'|'-') factor | power
// power := atom ('^' digits)?
// atom := digits | 'x' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(const std::string& src) : src_(src) {}

  poly::PolyRat run() {
    skip_ws();
    if (pos_ == src_.size()) fail("empty polynomial expression");
    poly::PolyRat value = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw degenerate_input("polynomial syntax error at position " + std::to_string(pos_ + 1) +
                           ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && space(src_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  poly::PolyRat expr() {
    poly::PolyRat acc = term();
    while (true) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  poly::PolyRat term() {
    poly::PolyRat acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        skip_ws();
        std::size_t at = pos_;
        poly::PolyRat divisor = factor();
        if (divisor.degree() > 0) {
          pos_ = at;
          fail("the divisor must be a nonzero constant");
        }
        if (divisor.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(Rational(1) / divisor.coeff(0));
      } else {
        return acc;
      }
    }
  }

  poly::PolyRat factor() {
    if (eat('+')) return factor();
    if (eat('-')) return -factor();
    return power();
  }

  poly::PolyRat power() {
    poly::PolyRat base = atom();
    if (!eat('^')) return base;
    long e = exponent();
    if (base.degree() > 0 && base.degree() * e > kParsedDegreeCap) {
      throw resource_limit("polynomial expression expands past degree " +
                           std::to_string(kParsedDegreeCap));
    }
    poly::PolyRat out({Rational(1)});
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  poly::PolyRat atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected a number, x, or a parenthesized expression");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      poly::PolyRat inner = expr();
      if (!eat(')')) fail("expected )");
      return inner;
    }
    if (digit(c)) return poly::PolyRat({Rational(integer_literal())});
    if (c == 'x') {
      ++pos_;
      if (pos_ < src_.size() &&
          (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '_')) {
        fail("only the single variable x is supported");
      }
      return poly::PolyRat::monomial(1, Rational(1));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      fail("only the variable x is supported");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && digit(src_[pos_])) ++pos_;
    return Integer(src_.substr(start, pos_ - start));
  }

  long exponent() {
    skip_ws();
    if (pos_ >= src_.size() || !digit(src_[pos_])) {
      fail("the exponent must be a nonnegative integer");
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && digit(src_[pos_])) ++pos_;
    std::string digits = src_.substr(start, pos_ - start);
    if (digits.size() > 4 || std::stol(digits) > kExponentCap) {
      throw resource_limit("exponent " + digits + " exceeds the cap of " +
                           std::to_string(kExponentCap));
    }
    return std::stol(digits);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void spec_fail(const std::string& spec, const std::string& what) {
  throw degenerate_input("group spec \"" + spec + "\": " + what);
}

long spec_int(const std::string& spec, const std::string& field, const std::string& text, long lo,
              long hi) {
  if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), digit)) {
    spec_fail(spec, field + " must be a positive integer");
  }
  long v = std::stol(text);
  if (v < lo || v > hi) {
    spec_fail(spec, field + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

grp::PermGroup parse_gens(const std::string& spec, const std::string& body) {
  std::vector<std::vector<std::vector<int>>> perms;
  std::vector<std::vector<int>> current;
  bool saw_cycle = false;
  int max_point = -1;
  std::size_t i = 0;
  auto flush = [&] {
    if (!saw_cycle) spec_fail(spec, "empty permutation entry");
    perms.push_back(current);
    current.clear();
    saw_cycle = false;
  };
  while (i < body.size()) {
    char c = body[i];
    if (space(c)) {
      ++i;
      continue;
    }
    if (c == ',') {
      ++i;
      flush();
      continue;
    }
    if (c != '(') spec_fail(spec, std::string("expected ( or , before '") + c + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      while (i < body.size() && space(body[i])) ++i;
      if (i < body.size() && body[i] == ')') {
        ++i;
        break;
      }
      if (i >= body.size() || !digit(body[i])) {
        spec_fail(spec, "expected a point label or ) inside a cycle");
      }
      std::size_t start = i;
      while (i < body.size() && digit(body[i])) ++i;
      if (i - start > 3) spec_fail(spec, "point label too large");
      int pt = std::stoi(body.substr(start, i - start));
      cycle.push_back(pt);
      max_point = std::max(max_point, pt);
    }
    current.push_back(cycle);
    saw_cycle = true;
  }
  flush();
  if (max_point < 0) spec_fail(spec, "no points mentioned");
  if (max_point + 1 > grp::kMaxDegree) {
    spec_fail(spec, "degree exceeds the supported maximum of " + std::to_string(grp::kMaxDegree));
  }
  int degree = max_point + 1;
  std::vector<grp::Permutation> gens;
  gens.reserve(perms.size());
  for (const auto& cycles : perms) gens.push_back(grp::Permutation::from_cycles(degree, cycles));
  return grp::PermGroup(degree, std::move(gens));
}

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = text.find(':', start);
    if (at == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, at - start));
    start = at + 1;
  }
}

std::string trimmed(const std::string& text) {
  std::size_t a = 0;
  std::size_t b = text.size();
  while (a < b && space(text[a])) ++a;
  while (b > a && space(text[b - 1])) --b;
  return text.substr(a, b - a);
}

const char* galois_token(galois::GaloisStatus s) {
  switch (s) {
    case galois::GaloisStatus::SnProven: return "SnProven";
    case galois::GaloisStatus::AnProven: return "AnProven";
    case galois::GaloisStatus::ContainedInAn: return "ContainedInAn";
    case galois::GaloisStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* niceness_token(f2::Niceness v) {
  switch (v) {
    case f2::Niceness::VeryNice: return "VeryNice";
    case f2::Niceness::NiceNotVeryNice: return "NiceNotVeryNice";
    case f2::Niceness::NotNice: return "NotNice";
    case f2::Niceness::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* disjoint_token(grp::DisjointVerdict v) {
  switch (v) {
    case grp::DisjointVerdict::Disjoint: return "Disjoint";
    case grp::DisjointVerdict::NotDisjoint: return "NotDisjoint";
    case grp::DisjointVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* method_token(f2::SimplicityMethod m) {
  return m == f2::SimplicityMethod::norton ? "norton" : "exhaustive";
}

void enforce_order_cap(const grp::PermGroup& g, long cap) {
  if (g.order() > cap) {
    throw resource_limit("group order " + g.order().get_str() + " exceeds the order cap " +
                         std::to_string(cap));
  }
}

json group_json(const std::string& spec, const grp::PermGroup& g) {
  json j;
  j["spec"] = spec;
  j["degree"] = g.degree();
  j["order"] = g.order().get_str();
  j["family"] = g.family() ? json(g.family()->to_string()) : json(nullptr);
  return j;
}

std::string group_text(const grp::PermGroup& g) {
  std::string out = g.family() ? g.family()->to_string() : "group";
  out += " of degree " + std::to_string(g.degree()) + ", order " + g.order().get_str();
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Degrees 1 and 2 sit below the main identifier's gate but still have
// decidable symmetric-group questions, so the front end settles them here.
galois::GaloisVerdict small_degree_galois(const poly::PolyRat& f, int prime_budget) {
  galois::GaloisVerdict v;
  if (f.degree() == 1) {
    v.status = galois::GaloisStatus::SnProven;
    v.disc_square = true;
    v.rules_fired.push_back("linear polynomial: the splitting field is Q and the group is the trivial S1");
    return v;
  }
  if (!poly::is_squarefree(f)) {
    throw degenerate_input("galois: requires a squarefree polynomial");
  }
  v.disc_square = galois::disc_is_square(f);
  auto cert = galois::irreducibility_certificate(f, prime_budget);
  if (cert.status == galois::IrreducibilityStatus::Irreducible) {
    v.status = galois::GaloisStatus::SnProven;
    v.rules_fired.push_back("irreducible quadratic: the transitive group is S2");
  } else {
    v.rules_fired.push_back("f is reducible, so the action on its roots is intransitive");
    if (v.disc_square) {
      v.status = galois::GaloisStatus::ContainedInAn;
      v.rules_fired.push_back("square discriminant: the group lies in the alternating group");
    }
  }
  return v;
}

int run_galois(const std::string& src, const RunConfig& cfg, std::ostream& out) {
  PolyExpr f = parse_poly_expr(src);
  if (f.value.degree() < 1) {
    throw degenerate_input("galois: a nonconstant polynomial is required");
  }
  galois::GaloisVerdict v = f.value.degree() < 3
                                ? small_degree_galois(f.value, cfg.prime_budget)
                                : galois::identify_sn_an(f.value, cfg.prime_budget);
  bool proven = v.status == galois::GaloisStatus::SnProven ||
                v.status == galois::GaloisStatus::AnProven;
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["command"] = "galois";
    j["input"] = poly::to_string(f.value);
    j["prime_budget"] = cfg.prime_budget;
    j["status"] = galois_token(v.status);
    j["discriminant_square"] = v.disc_square;
    json witnesses = json::array();
    for (const auto& [p, t] : v.witnesses) {
      witnesses.push_back(json{{"cycle_type", t}, {"prime", p}});
    }
    j["witnesses"] = witnesses;
    j["rules"] = v.rules_fired;
    emit(out, j);
  } else {
    out << "input: " << poly::to_string(f.value) << "\n";
    out << "status: " << galois::to_string(v.status) << "\n";
    out << "discriminant square: " << (v.disc_square ? "yes" : "no") << "\n";
    for (const auto& rule : v.rules_fired) out << "rule: " << rule << "\n";
  }
  return proven ? 0 : 2;
}

int run_heart(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
  grp::PermGroup g = parse_group_spec(spec);
  enforce_order_cap(g, cfg.order_cap);
  f2::F2Module m = f2::heart_module(g);
  f2::SimplicityVerdict s = f2::simplicity(m, cfg.seed);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["command"] = "heart";
    j["group"] = group_json(spec, g);
    j["dimension"] = m.dimension;
    j["label"] = m.label;
    j["simple"] = s.simple;
    j["absolutely_simple"] = s.absolutely_simple;
    j["endomorphism_dimension"] = s.endomorphism_dimension;
    j["method"] = method_token(s.method);
    emit(out, j);
  } else {
    out << "group: " << group_text(g) << "\n";
    out << "heart dimension: " << m.dimension << "\n";
    out << "simple: " << (s.simple ? "yes" : "no") << "\n";
    out << "absolutely simple: " << (s.absolutely_simple ? "yes" : "no") << "\n";
    out << "endomorphism algebra dimension: " << s.endomorphism_dimension << "\n";
    out << "method: " << method_token(s.method) << "\n";
  }
  return 0;
}

int run_nice(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
  grp::PermGroup g = parse_group_spec(spec);
  enforce_order_cap(g, cfg.order_cap);
  f2::NicenessReport report = f2::classify_niceness(g, cfg.seed);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["command"] = "nice";
    j["group"] = group_json(spec, g);
    j["verdict"] = niceness_token(report.verdict);
    j["transitivity_degree"] = report.transitivity_degree;
    if (report.heart) {
      j["heart"] = json{{"simple", report.heart->simple},
                        {"absolutely_simple", report.heart->absolutely_simple},
                        {"endomorphism_dimension", report.heart->endomorphism_dimension},
                        {"method", method_token(report.heart->method)}};
    } else {
      j["heart"] = nullptr;
    }
    j["caveats"] = report.caveats;
    j["detail"] = report.detail;
    emit(out, j);
  } else {
    out << "group: " << group_text(g) << "\n";
    out << "verdict: " << f2::to_string(report.verdict) << "\n";
    out << "verified transitivity degree: " << report.transitivity_degree << "\n";
    if (report.heart) {
      out << "heart simple: " << (report.heart->simple ? "yes" : "no")
          << ", absolutely simple: " << (report.heart->absolutely_simple ? "yes" : "no") << "\n";
    }
    for (const auto& caveat : report.caveats) out << "caveat: " << caveat << "\n";
    out << "detail: " << report.detail << "\n";
  }
  return report.verdict == f2::Niceness::Unknown ? 2 : 0;
}

int run_newton(const std::string& src, long p, const RunConfig& cfg, std::ostream& out) {
  PolyExpr f = parse_poly_expr(src);
  padic::NewtonPolygon polygon = padic::newton_polygon(f.value, p);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["command"] = "newton";
    j["input"] = poly::to_string(f.value);
    j["p"] = polygon.p;
    json vertices = json::array();
    for (const auto& [i, v] : polygon.vertices) vertices.push_back(json::array({i, v}));
    j["vertices"] = vertices;
    json segments = json::array();
    for (const auto& seg : polygon.segments) {
      segments.push_back(json{{"slope", seg.slope.get_str()}, {"length", seg.length}});
    }
    j["segments"] = segments;
    emit(out, j);
  } else {
    out << "input: " << poly::to_string(f.value) << "\n";
    out << "p: " << polygon.p << "\n";
    for (const auto& [i, v] : polygon.vertices) {
      out << "vertex (" << i << ", " << v << ")\n";
    }
    for (const auto& seg : polygon.segments) {
      out << "slope " << seg.slope.get_str() << " over length " << seg.length << "\n";
    }
  }
  return 0;
}

int run_disjoint(const std::string& spec1, const std::string& spec2, const RunConfig& cfg,
                 std::ostream& out) {
  grp::PermGroup g1 = parse_group_spec(spec1);
  grp::PermGroup g2 = parse_group_spec(spec2);
  enforce_order_cap(g1, cfg.order_cap);
  enforce_order_cap(g2, cfg.order_cap);
  grp::DisjointResult r = grp::are_disjoint(g1, g2);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["command"] = "disjoint";
    j["first"] = group_json(spec1, g1);
    j["second"] = group_json(spec2, g2);
    j["verdict"] = disjoint_token(r.verdict);
    j["reason"] = r.reason;
    emit(out, j);
  } else {
    out << "first: " << group_text(g1) << "\n";
    out << "second: " << group_text(g2) << "\n";
    out << "verdict: " << disjoint_token(r.verdict) << "\n";
    out << "reason: " << r.reason << "\n";
  }
  return r.verdict == grp::DisjointVerdict::Unknown ? 2 : 0;
}

struct CertifyArgs {
  std::string f;
  std::string h;
  std::string assert_f;
  std::string assert_h;
  long characteristic = 0;
};

void render_certificate_text(const certify::Certificate& cert, std::ostream& out) {
  out << "theorem: " << certify::to_string(cert.theorem) << "\n";
  out << "conclusion: " << certify::to_string(cert.conclusion) << "\n";
  out << "conditional: " << (cert.conditional ? "yes" : "no") << "\n";
  out << "characteristic: " << cert.characteristic << "\n";
  out << "f: " << cert.f_input << "\n";
  out << "h: " << cert.h_input << "\n";
  for (const auto& hyp : cert.hypotheses) {
    out << "[" << certify::to_string(hyp.status) << "] " << hyp.name << "\n";
    for (const auto& witness : hyp.witnesses) out << "    " << witness << "\n";
    if (!hyp.citation.empty()) out << "    cite: " << hyp.citation << "\n";
  }
  out << cert.narrative << "\n";
}

int run_certify(const CertifyArgs& a, const RunConfig& cfg, std::ostream& out) {
  certify::CertifyOptions options;
  options.prime_budget = cfg.prime_budget;
  options.seed = cfg.seed;
  bool asserted_mode = !a.assert_f.empty() || !a.assert_h.empty();
  certify::Certificate cert = [&] {
    if (asserted_mode) {
      if (a.assert_f.empty() || a.assert_h.empty()) {
        throw degenerate_input("certify: --assert-f and --assert-h must be given together");
      }
      if (!a.f.empty() || !a.h.empty()) {
        throw degenerate_input(
            "certify: polynomial arguments and asserted groups are mutually exclusive");
      }
      grp::PermGroup gf = parse_group_spec(a.assert_f);
      grp::PermGroup gh = parse_group_spec(a.assert_h);
      enforce_order_cap(gf, cfg.order_cap);
      enforce_order_cap(gh, cfg.order_cap);
      certify::GaloisAssertion af{a.assert_f, std::move(gf), "asserted on the command line"};
      certify::GaloisAssertion ah{a.assert_h, std::move(gh), "asserted on the command line"};
      return certify::certify_asserted(af, ah, a.characteristic, options);
    }
    if (a.f.empty() || a.h.empty()) {
      throw degenerate_input(
          "certify: two polynomials are required unless both --assert-f and --assert-h are given");
    }
    if (a.characteristic != 0) {
      throw degenerate_input("certify: --char applies only to asserted Galois data");
    }
    return certify::certify_hom_zero(parse_poly(a.f), parse_poly(a.h), options);
  }();
  if (cfg.format == OutputFormat::Json) {
    out << certify::to_json(cert);
  } else {
    render_certificate_text(cert, out);
  }
  return cert.conclusion == certify::Conclusion::NotApplicable ? 2 : 0;
}

std::optional<int> parse_env_budget(const std::string& text) {
  if (text.empty() || text.size() > 7 || !std::all_of(text.begin(), text.end(), digit)) {
    return std::nullopt;
  }
  int v = std::stoi(text);
  if (v < 1) return std::nullopt;
  return v;
}

}  // namespace

poly::PolyRat parse_poly(const std::string& src) { return PolyParser(src).run(); }

PolyExpr parse_poly_expr(const std::string& src) { return PolyExpr{src, parse_poly(src)}; }

grp::PermGroup parse_group_spec(const std::string& spec) {
  std::string body = trimmed(spec);
  if (body.rfind("gens:", 0) == 0) return parse_gens(spec, body.substr(5));
  std::vector<std::string> parts = split_colon(body);
  const std::string& head = parts[0];
  if (head == "S" && parts.size() == 2) {
    return grp::symmetric_group(static_cast<int>(spec_int(spec, "n", parts[1], 1, grp::kMaxDegree)));
  }
  if (head == "A" && parts.size() == 2) {
    return grp::alternating_group(
        static_cast<int>(spec_int(spec, "n", parts[1], 1, grp::kMaxDegree)));
  }
  if (head == "C" && parts.size() == 2) {
    return grp::cyclic_group(static_cast<int>(spec_int(spec, "n", parts[1], 1, grp::kMaxDegree)));
  }
  if (head == "PSL" && parts.size() == 3) {
    return grp::projective_special_group(static_cast<int>(spec_int(spec, "d", parts[1], 2, 6)),
                                         spec_int(spec, "q", parts[2], 2, grp::kMaxDegree));
  }
  if (head == "PGL" && parts.size() == 3) {
    return grp::projective_general_group(static_cast<int>(spec_int(spec, "d", parts[1], 2, 6)),
                                         spec_int(spec, "q", parts[2], 2, grp::kMaxDegree));
  }
  spec_fail(spec, "expected S:n, A:n, C:n, PSL:d:q, PGL:d:q, or gens:(...)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sound Galois, module, and non-isogeny certificates for hyperelliptic curves"};
  app.name("homzero");
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  CLI::Option* budget_opt =
      app.add_option("--prime-budget", cfg.prime_budget,
                     "how many good primes the sampling procedures may consume")
          ->check(CLI::Range(1, 1000000));
  app.add_option("--seed", cfg.seed, "seed for the randomized simplicity criterion");
  app.add_option("--order-cap", cfg.order_cap, "largest accepted group order")
      ->check(CLI::PositiveNumber);

  std::string galois_poly;
  CLI::App* galois_cmd = app.add_subcommand("galois", "prove the Galois group of f is Sn or An");
  galois_cmd->add_option("poly", galois_poly, "polynomial in x")->required();

  std::string heart_spec;
  CLI::App* heart_cmd =
      app.add_subcommand("heart", "simplicity of the heart of the mod-2 permutation module");
  heart_cmd->add_option("--group", heart_spec, "group spec, e.g. S:7 or PSL:2:11")->required();

  std::string nice_spec;
  CLI::App* nice_cmd = app.add_subcommand("nice", "niceness classification of a permutation group");
  nice_cmd->add_option("--group", nice_spec, "group spec")->required();

  std::string newton_poly;
  long newton_p = 0;
  CLI::App* newton_cmd = app.add_subcommand("newton", "p-adic Newton polygon of f");
  newton_cmd->add_option("poly", newton_poly, "polynomial in x")->required();
  newton_cmd->add_option("p", newton_p, "prime")->required();

  std::string disjoint_a;
  std::string disjoint_b;
  CLI::App* disjoint_cmd =
      app.add_subcommand("disjoint", "decide whether two groups share a nontrivial common quotient");
  disjoint_cmd->add_option("first", disjoint_a, "group spec")->required();
  disjoint_cmd->add_option("second", disjoint_b, "group spec")->required();

  CertifyArgs certify_args;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "emit a non-isogeny certificate for a pair of inputs");
  certify_cmd->add_option("F", certify_args.f, "first polynomial");
  certify_cmd->add_option("H", certify_args.h, "second polynomial");
  certify_cmd->add_option("--assert-f", certify_args.assert_f,
                          "asserted Galois group of the first input (group spec)");
  certify_cmd->add_option("--assert-h", certify_args.assert_h,
                          "asserted Galois group of the second input (group spec)");
  certify_cmd->add_option("--char", certify_args.characteristic,
                          "base field characteristic, 0 or an odd prime");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 1;
  }

  cfg.format = format_name == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (budget_opt->count() == 0) {
    if (const char* env = std::getenv("HOMZERO_PRIME_BUDGET")) {
      std::optional<int> parsed = parse_env_budget(env);
      if (!parsed) {
        err << "homzero: HOMZERO_PRIME_BUDGET must be a positive integer, got \"" << env << "\"\n";
        return 1;
      }
      cfg.prime_budget = *parsed;
    }
  }

  try {
    if (galois_cmd->parsed()) return run_galois(galois_poly, cfg, out);
    if (heart_cmd->parsed()) return run_heart(heart_spec, cfg, out);
    if (nice_cmd->parsed()) return run_nice(nice_spec, cfg, out);
    if (newton_cmd->parsed()) return run_newton(newton_poly, newton_p, cfg, out);
    if (disjoint_cmd->parsed()) return run_disjoint(disjoint_a, disjoint_b, cfg, out);
    if (certify_cmd->parsed()) return run_certify(certify_args, cfg, out);
  } catch (const inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const degenerate_input& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const resource_limit& e) {
    err << "resource limit: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace homzero::cli
