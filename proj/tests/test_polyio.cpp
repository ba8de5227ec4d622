#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "einsp/polyio.hpp"

using namespace einsp;

namespace {
VarCtxPtr ctx() { return VarContext::make({"x1", "x2", "x12"}); }
}  // namespace

TEST_CASE("printer format") {
  auto c = ctx();
  CHECK(poly_to_text(MultiPoly::zero(c)) == "0");
  CHECK(poly_to_text(poly_from_text("x1", c)) == "x1");
  CHECK(poly_to_text(poly_from_text("-x1 + 3", c)) == "-x1 + 3");
  CHECK(poly_to_text(poly_from_text("2*x1^2*x2 - 1/2*x12 + x2 - 7", c)) ==
        "2*x1^2*x2 + x2 - 1/2*x12 - 7");
  CHECK(poly_to_text(MultiPoly::constant(c, BigRational(-3, 4))) == "-3/4");
}

TEST_CASE("parser accepts parentheses and signs") {
  auto c = ctx();
  CHECK(poly_from_text("(x1 + x2)*(x1 - x2)", c) == poly_from_text("x1^2 - x2^2", c));
  CHECK(poly_from_text("-(x1 - x2)^2", c) == poly_from_text("-x1^2 + 2*x1*x2 - x2^2", c));
  CHECK(poly_from_text("+x1 - -3", c) == poly_from_text("x1 + 3", c));
  CHECK(poly_from_text("3/4*(x1 + 2)^2", c) ==
        poly_from_text("3/4*x1^2 + 3*x1 + 3", c));
  CHECK(poly_from_text("(x1)", c) == poly_from_text("x1", c));
}

TEST_CASE("parser errors") {
  auto c = ctx();
  CHECK_THROWS_AS(poly_from_text("x1 +", c), ParseError);
  CHECK_THROWS_AS(poly_from_text("q", c), ParseError);
  CHECK_THROWS_AS(poly_from_text("x1^x2", c), ParseError);
  CHECK_THROWS_AS(poly_from_text("x1/x2", c), ParseError);
  CHECK_THROWS_AS(poly_from_text("(x1", c), ParseError);
  CHECK_THROWS_AS(poly_from_text("x1 x2", c), ParseError);
  CHECK_THROWS_AS(poly_from_text("1/0", c), ParseError);
}

TEST_CASE("round trip is bit exact") {
  auto c = ctx();
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coef(-30, 30);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> ex(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Term> terms;
    for (int t = 0; t < 8; ++t) {
      Monomial m(3);
      for (int v = 0; v < 3; ++v) {
        m.exps[v] = static_cast<std::uint16_t>(ex(rng));
        m.deg += m.exps[v];
      }
      terms.push_back({BigRational(coef(rng), den(rng)), m});
    }
    const MultiPoly p = MultiPoly::from_terms(c, terms);
    const std::string text = poly_to_text(p);
    CHECK(poly_from_text(text, c) == p);
    CHECK(poly_to_text(poly_from_text(text, c)) == text);
  }
}

TEST_CASE("poly files") {
  const std::string text =
      "# comment\n"
      "vars: a, b\n"
      "\n"
      "a^2 - b\n"
      "3*a*b + 1/2\n";
  const PolyFile f = parse_poly_file_text(text);
  CHECK(f.ctx->arity() == 2);
  CHECK(f.polys.size() == 2);
  CHECK(f.polys[0] == poly_from_text("a^2 - b", f.ctx));

  const std::string out = poly_file_to_text(f);
  const PolyFile g = parse_poly_file_text(out);
  CHECK(g.polys == f.polys);
  CHECK(poly_file_to_text(g) == out);

  CHECK_THROWS_AS(parse_poly_file_text("a + b\n"), ParseError);
  CHECK_THROWS_AS(parse_poly_file_text("vars: a, 2b\na\n"), ParseError);
}
