#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "homzero/cli.hpp"
#include "homzero/errors.hpp"
#include "homzero/numeric.hpp"
#include "homzero/poly_rat.hpp"

using homzero::Rational;
using homzero::degenerate_input;
using homzero::resource_limit;
using homzero::poly::PolyRat;
using homzero::cli::parse_group_spec;
using homzero::cli::parse_poly;
using homzero::cli::parse_poly_expr;

namespace {

PolyRat P(std::vector<long> ascending) { return PolyRat::from_integers(ascending); }

struct Invocation {
  int exit_code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.exit_code = homzero::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json out_json(const Invocation& r) { return nlohmann::json::parse(r.out); }

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

// Restores the previous value on scope exit so test order never matters.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) previous_ = old;
    if (value) {
      ::setenv(name, value, 1);
    } else {
      ::unsetenv(name);
    }
  }
  ~EnvGuard() {
    if (previous_) {
      ::setenv(name_, previous_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> previous_;
};

const char* kExp7 = "1+x+x^2/2+x^3/6+x^4/24+x^5/120+x^6/720+x^7/5040";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("polynomial grammar accepts the documented forms") {
  CHECK(parse_poly("x^5 - x - 1") == P({-1, -1, 0, 0, 0, 1}));
  CHECK(parse_poly("1 + x + x^2/2 + x^3/6") ==
        PolyRat({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
  CHECK(parse_poly("  3*x^2-1/2  ") == PolyRat({Rational(-1, 2), Rational(0), Rational(3)}));
  CHECK(parse_poly("(x+1)^2") == P({1, 2, 1}));
  CHECK(parse_poly("-x") == P({0, -1}));
  CHECK(parse_poly("x^0") == P({1}));
  CHECK(parse_poly("5/2") == PolyRat({Rational(5, 2)}));
  CHECK(parse_poly("2*x/4") == PolyRat({Rational(0), Rational(1, 2)}));
  CHECK(parse_poly("(1-x)*(1+x)") == P({1, 0, -1}));
  CHECK(parse_poly("x - x") == PolyRat());
  CHECK(parse_poly("123456789012345678901234567890*x").coeff(1) ==
        Rational(homzero::Integer("123456789012345678901234567890")));

  // whitespace insensitivity
  CHECK(parse_poly(" x ^ 2 + 1 ") == parse_poly("x^2+1"));
}

TEST_CASE("polynomial grammar rejects malformed input with a position") {
  auto rejects = [](const std::string& src, const std::string& fragment) {
    try {
      parse_poly(src);
      FAIL_CHECK("no error for ", src);
    } catch (const degenerate_input& e) {
      CHECK_MESSAGE(contains(e.what(), "position"), src, " -> ", e.what());
      CHECK_MESSAGE(contains(e.what(), fragment), src, " -> ", e.what());
    }
  };
  rejects("x*y", "variable x");
  rejects("x*y", "position 3");
  rejects("y + 1", "position 1");
  rejects("x2", "single variable x");
  rejects("", "empty");
  rejects("   ", "empty");
  rejects("x^", "exponent");
  rejects("x^-2", "exponent");
  rejects("(x+1", "expected )");
  rejects("x+", "expected a number");
  rejects("x/0", "division by zero");
  rejects("x/(2-2)", "division by zero");
  rejects("1/x", "nonzero constant");
  rejects("x 2", "trailing");
  rejects("x$", "trailing");
  rejects("$x", "unexpected character");
}

TEST_CASE("polynomial grammar enforces size caps") {
  CHECK_THROWS_AS((void)parse_poly("x^513"), resource_limit);
  CHECK_THROWS_AS((void)parse_poly("x^99999"), resource_limit);
  CHECK_THROWS_AS((void)parse_poly("(x^100)^100"), resource_limit);
  CHECK(parse_poly("x^512").degree() == 512);
}

TEST_CASE("printing and re-parsing is the identity on parsed values") {
  const std::vector<std::string> sources = {
      "x^5 - x - 1",
      "1 + x + x^2/2 + x^3/6",
      kExp7,
      "0",
      "-x^3 + 1/2",
      "7",
      "-1/3*x^4 + 2*x - 5/7",
      "(x+1)*(x-1)*(x^2+x+1)",
      "x^10/1024 - x/3",
  };
  for (const auto& src : sources) {
    CAPTURE(src);
    PolyRat once = parse_poly(src);
    CHECK(parse_poly(homzero::poly::to_string(once)) == once);
  }
}

TEST_CASE("parse_poly_expr keeps the source verbatim") {
  auto expr = parse_poly_expr(" x^2 + 1 ");
  CHECK(expr.source == " x^2 + 1 ");
  CHECK(expr.value == P({1, 0, 1}));
}

TEST_CASE("group specs cover families and explicit generators") {
  auto s5 = parse_group_spec("S:5");
  CHECK(s5.degree() == 5);
  CHECK(s5.order() == 120);
  REQUIRE(s5.family().has_value());
  CHECK(s5.family()->to_string() == "S5");

  CHECK(parse_group_spec("A:7").order() == 2520);
  CHECK(parse_group_spec("C:4").order() == 4);

  auto psl = parse_group_spec("PSL:2:5");
  CHECK(psl.degree() == 6);
  CHECK(psl.order() == 60);

  auto pgl = parse_group_spec("PGL:3:4");
  CHECK(pgl.degree() == 21);
  CHECK(pgl.order() == 60480);

  auto gens = parse_group_spec("gens:(0 1 2)(3 4),(0 1)");
  CHECK(gens.degree() == 5);
  CHECK(gens.order() == 12);
  CHECK_FALSE(gens.family().has_value());

  // surrounding whitespace is tolerated
  CHECK(parse_group_spec(" S:3 ").order() == 6);
}

TEST_CASE("group specs reject malformed input") {
  CHECK_THROWS_AS((void)parse_group_spec("S:0"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("S"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("S:"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("S:abc"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("S:-3"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("S:100"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("X:3"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("PSL:2"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("PSL:2:5:7"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("gens:"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("gens:(0 1"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("gens:(0 1),"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec("gens:0 1"), degenerate_input);
  CHECK_THROWS_AS((void)parse_group_spec(""), degenerate_input);
  // degree cap: a point label of 64 needs degree 65
  CHECK_THROWS_AS((void)parse_group_spec("gens:(0 64)"), degenerate_input);
}

TEST_CASE("galois subcommand reports proofs, reducibility, and errors") {
  auto proven = invoke({"galois", "x^5-x-1", "--format", "json"});
  CHECK(proven.exit_code == 0);
  auto j = out_json(proven);
  CHECK(j["command"] == "galois");
  CHECK(j["status"] == "SnProven");
  CHECK(j["input"] == "x^5 - x - 1");
  CHECK(j["discriminant_square"] == false);
  CHECK(j["witnesses"].is_array());
  CHECK_FALSE(j["rules"].empty());

  auto reducible = invoke({"galois", "x^2-1"});
  CHECK(reducible.exit_code == 2);
  CHECK(contains(reducible.out, "reducible"));

  auto text = invoke({"galois", "x^3-x-1"});
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "Sn proven"));

  auto linear = invoke({"galois", "x-2"});
  CHECK(linear.exit_code == 0);

  auto quadratic = invoke({"galois", "x^2+1", "--format", "json"});
  CHECK(quadratic.exit_code == 0);
  CHECK(out_json(quadratic)["status"] == "SnProven");

  auto constant = invoke({"galois", "5"});
  CHECK(constant.exit_code == 1);
  CHECK(contains(constant.err, "nonconstant"));

  auto squareful = invoke({"galois", "(x-1)^2*(x+2)"});
  CHECK(squareful.exit_code == 1);
  CHECK(contains(squareful.err, "squarefree"));
}

TEST_CASE("newton subcommand prints the polygon exactly") {
  auto json_run = invoke({"newton", kExp7, "7", "--format", "json"});
  CHECK(json_run.exit_code == 0);
  auto j = out_json(json_run);
  CHECK(j["command"] == "newton");
  CHECK(j["p"] == 7);
  REQUIRE(j["segments"].size() == 1);
  CHECK(j["segments"][0]["slope"] == "-1/7");
  CHECK(j["segments"][0]["length"] == 7);
  REQUIRE(j["vertices"].size() == 2);
  CHECK(j["vertices"][0] == nlohmann::json::array({0, 0}));
  CHECK(j["vertices"][1] == nlohmann::json::array({7, -1}));

  auto text_run = invoke({"newton", kExp7, "7"});
  CHECK(text_run.exit_code == 0);
  CHECK(contains(text_run.out, "slope -1/7 over length 7"));

  CHECK(invoke({"newton", "x^2+1", "6"}).exit_code == 1);
  CHECK(invoke({"newton", "0", "5"}).exit_code == 1);
}

TEST_CASE("heart subcommand reports the module and its simplicity") {
  auto r = invoke({"heart", "--group", "S:7", "--format", "json"});
  CHECK(r.exit_code == 0);
  auto j = out_json(r);
  CHECK(j["command"] == "heart");
  CHECK(j["dimension"] == 6);
  CHECK(j["simple"] == true);
  CHECK(j["absolutely_simple"] == true);
  CHECK(j["endomorphism_dimension"] == 1);
  CHECK(j["group"]["degree"] == 7);
  CHECK(j["group"]["order"] == "5040");
  CHECK(j["group"]["family"] == "S7");

  auto text = invoke({"heart", "--group", "PSL:2:11"});
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "heart dimension: 10"));

  auto capped = invoke({"heart", "--group", "S:20", "--order-cap", "1000000"});
  CHECK(capped.exit_code == 1);
  CHECK(contains(capped.err, "order cap"));

  auto bad_spec = invoke({"heart", "--group", "Q:8"});
  CHECK(bad_spec.exit_code == 1);
  CHECK(contains(bad_spec.err, "group spec"));
}

TEST_CASE("nice subcommand classifies the catalogue fixtures") {
  auto very = invoke({"nice", "--group", "PGL:2:5", "--format", "json"});
  CHECK(very.exit_code == 0);
  auto jv = out_json(very);
  CHECK(jv["command"] == "nice");
  CHECK(jv["verdict"] == "VeryNice");
  CHECK(jv["heart"]["simple"] == true);

  auto nice_only = invoke({"nice", "--group", "PSL:2:11", "--format", "json"});
  CHECK(nice_only.exit_code == 0);
  CHECK(out_json(nice_only)["verdict"] == "NiceNotVeryNice");

  auto text = invoke({"nice", "--group", "S:7"});
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "very nice"));
}

TEST_CASE("disjoint subcommand decides pairs and reports reasons") {
  auto r = invoke({"disjoint", "S:5", "A:5", "--format", "json"});
  CHECK(r.exit_code == 0);
  auto j = out_json(r);
  CHECK(j["command"] == "disjoint");
  CHECK(j["verdict"] == "Disjoint");
  CHECK_FALSE(j["reason"].get<std::string>().empty());
  CHECK(j["first"]["spec"] == "S:5");
  CHECK(j["second"]["spec"] == "A:5");

  auto same = invoke({"disjoint", "S:4", "S:4"});
  CHECK(same.exit_code == 0);
  CHECK(contains(same.out, "NotDisjoint"));

  auto psl_pgl = invoke({"disjoint", "PSL:2:5", "PGL:2:5"});
  CHECK(psl_pgl.exit_code == 0);
  CHECK(contains(psl_pgl.out, "Disjoint"));
}

TEST_CASE("certify subcommand mirrors the library certificates") {
  auto hom_zero = invoke({"certify", "x^5-x-1", "x^7-x-1", "--format", "json"});
  CHECK(hom_zero.exit_code == 0);
  auto j = out_json(hom_zero);
  CHECK(j["theorem"] == "CorNneM");
  CHECK(j["conclusion"] == "HomZero");
  CHECK(j["conditional"] == false);

  auto equal_degree = invoke({"certify", "x^7-x-1", kExp7, "--format", "json"});
  CHECK(equal_degree.exit_code == 0);
  CHECK(out_json(equal_degree)["theorem"] == "CorNeqM");

  auto inapplicable = invoke({"certify", "x^5-x-1", "x^5-x-1", "--format", "json"});
  CHECK(inapplicable.exit_code == 2);
  CHECK(out_json(inapplicable)["conclusion"] == "NotApplicable");

  auto text = invoke({"certify", "x^5-x-1", "x^7-x-1"});
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "conclusion: HomZero"));
  CHECK(contains(text.out, "[Proven]"));

  auto asserted = invoke({"certify", "--assert-f", "PSL:2:11", "--assert-h", "PGL:2:11",
                          "--char", "11", "--format", "json"});
  CHECK(asserted.exit_code == 0);
  auto ja = out_json(asserted);
  CHECK(ja["conclusion"] == "HomZero");
  CHECK(ja["conditional"] == true);
  CHECK(ja["characteristic"] == 11);

  auto supersingular = invoke({"certify", "--assert-f", "PSL:2:5", "--assert-h", "PGL:2:5",
                               "--char", "5", "--format", "json"});
  CHECK(supersingular.exit_code == 0);
  CHECK(out_json(supersingular)["conclusion"] == "HomZeroOrBothSupersingular");
}

TEST_CASE("certify subcommand rejects inconsistent argument mixes") {
  auto missing_one = invoke({"certify", "--assert-f", "S:9"});
  CHECK(missing_one.exit_code == 1);
  CHECK(contains(missing_one.err, "given together"));

  auto mixed = invoke({"certify", "x^5-x-1", "x^7-x-1", "--assert-f", "S:5", "--assert-h", "S:7"});
  CHECK(mixed.exit_code == 1);
  CHECK(contains(mixed.err, "mutually exclusive"));

  auto char_without_assert = invoke({"certify", "x^5-x-1", "x^7-x-1", "--char", "7"});
  CHECK(char_without_assert.exit_code == 1);
  CHECK(contains(char_without_assert.err, "--char"));

  auto one_poly = invoke({"certify", "x^5-x-1"});
  CHECK(one_poly.exit_code == 1);

  auto even_char = invoke({"certify", "--assert-f", "S:9", "--assert-h", "A:9", "--char", "2"});
  CHECK(even_char.exit_code == 1);
}

TEST_CASE("usage errors exit with 1 and print usage text") {
  auto unknown_flag = invoke({"galois", "x^3-x-1", "--bogus"});
  CHECK(unknown_flag.exit_code == 1);
  CHECK(contains(unknown_flag.err, "Usage"));

  auto no_subcommand = invoke({});
  CHECK(no_subcommand.exit_code == 1);

  auto bad_subcommand = invoke({"frobnicate"});
  CHECK(bad_subcommand.exit_code == 1);

  auto missing_positional = invoke({"newton", "x^2+1"});
  CHECK(missing_positional.exit_code == 1);

  auto bad_format = invoke({"galois", "x^3-x-1", "--format", "yaml"});
  CHECK(bad_format.exit_code == 1);

  auto bad_budget = invoke({"galois", "x^3-x-1", "--prime-budget", "0"});
  CHECK(bad_budget.exit_code == 1);

  auto help = invoke({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(contains(help.out, "Subcommands"));
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> invocations = {
      {"certify", "x^5-x-1", "x^7-x-1", "--format", "json"},
      {"galois", "x^5-x-1", "--format", "json"},
      {"heart", "--group", "PSL:2:11", "--format", "json"},
      {"nice", "--group", "PGL:2:5", "--format", "json"},
      {"disjoint", "S:5", "A:5", "--format", "json"},
      {"newton", kExp7, "7", "--format", "json"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args.front());
    auto first = invoke(args);
    auto second = invoke(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("the prime budget comes from the flag, the environment, then the default") {
  {
    EnvGuard guard("HOMZERO_PRIME_BUDGET", nullptr);
    auto r = invoke({"galois", "x^5-x-1", "--format", "json"});
    CHECK(out_json(r)["prime_budget"] == 100);
  }
  {
    EnvGuard guard("HOMZERO_PRIME_BUDGET", "7");
    auto r = invoke({"galois", "x^5-x-1", "--format", "json"});
    CHECK(out_json(r)["prime_budget"] == 7);
  }
  {
    EnvGuard guard("HOMZERO_PRIME_BUDGET", "7");
    auto r = invoke({"galois", "x^5-x-1", "--prime-budget", "5", "--format", "json"});
    CHECK(out_json(r)["prime_budget"] == 5);
  }
  {
    EnvGuard guard("HOMZERO_PRIME_BUDGET", "banana");
    auto r = invoke({"galois", "x^5-x-1"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "HOMZERO_PRIME_BUDGET"));
  }
  {
    EnvGuard guard("HOMZERO_PRIME_BUDGET", "0");
    CHECK(invoke({"galois", "x^5-x-1"}).exit_code == 1);
  }
}

}  // TEST_SUITE("cli")
