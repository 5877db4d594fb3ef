#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "homzero/f2_module.hpp"
#include "homzero/perm_group.hpp"
#include "homzero/poly_rat.hpp"

namespace homzero::cli {

// Exact polynomial expressions in one variable x: integer literals, + - * /
// ^ and parentheses, whitespace insensitive. / needs a nonzero constant
// divisor (so rational coefficients are written 1/2*x or x/2), ^ a
// nonnegative integer exponent. Throws degenerate_input carrying the
// 1-based position of the offense; variables other than x are rejected.
poly::PolyRat parse_poly(const std::string& src);

struct PolyExpr {
  std::string source;
  poly::PolyRat value;
};

PolyExpr parse_poly_expr(const std::string& src);

// Group literals: S:n, A:n, C:n, PSL:d:q, PGL:d:q, or explicit generators
// as gens:(0 1 2)(3 4),(0 1) with 0-based points; the degree of a gens:
// group is one past the largest point mentioned.
grp::PermGroup parse_group_spec(const std::string& spec);

enum class OutputFormat { Text, Json };

struct RunConfig {
  int prime_budget = 100;
  std::uint64_t seed = f2::kDefaultSimplicitySeed;
  long order_cap = 1000000000000L;
  OutputFormat format = OutputFormat::Text;
};

// Front end used by the homzero binary. args excludes the program name.
// Exit code 0: a decided verdict (proven group, computed polygon, HomZero
// or its supersingular variant). 2: soundly inconclusive (unknown verdict,
// NotApplicable certificate). 1: input or usage error. The default prime
// budget can be set with the HOMZERO_PRIME_BUDGET environment variable;
// --prime-budget wins over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homzero::cli
