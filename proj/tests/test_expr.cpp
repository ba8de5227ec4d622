#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "einsp/expr.hpp"
#include "einsp/polyio.hpp"

using namespace einsp;

namespace {

ExprPtr V(const char* n) { return RationalExpr::var(n); }
ExprPtr C(long n, long d = 1) { return RationalExpr::constant(BigRational(n, d)); }

VarCtxPtr ctx() { return VarContext::make({"x", "y"}); }

}  // namespace

TEST_CASE("evaluation") {
  // x/(2y) + 3
  const ExprPtr e = V("x") / (C(2) * V("y")) + C(3);
  std::map<std::string, BigRational> pt{{"x", BigRational(1)}, {"y", BigRational(2)}};
  CHECK(e->eval(pt) == BigRational(13, 4));
  pt["y"] = BigRational(0);
  CHECK_THROWS_AS(e->eval(pt), EvalError);
  std::map<std::string, BigRational> missing{{"x", BigRational(1)}};
  CHECK_THROWS_AS(e->eval(missing), EvalError);
}

TEST_CASE("interval evaluation") {
  const ExprPtr e = V("x") * V("x") - V("y");
  std::map<std::string, RatInterval> box{
      {"x", RatInterval(BigRational(1), BigRational(2))},
      {"y", RatInterval(BigRational(0), BigRational(1))}};
  const RatInterval r = e->eval(box);
  CHECK(r.lo == BigRational(0));
  CHECK(r.hi == BigRational(4));
  box["y"] = RatInterval(BigRational(-1), BigRational(1));
  CHECK_THROWS_AS((RationalExpr::div(C(1), V("y")))->eval(box), DivByZero);
}

TEST_CASE("substitution") {
  const ExprPtr e = V("x") / V("y") + V("y");
  const ExprPtr s = e->substitute("y", C(1));
  std::map<std::string, BigRational> pt{{"x", BigRational(5)}};
  CHECK(s->eval(pt) == BigRational(6));
}

TEST_CASE("powers, including negative") {
  const ExprPtr e = RationalExpr::pow(V("x"), -2);
  std::map<std::string, BigRational> pt{{"x", BigRational(3)}};
  CHECK(e->eval(pt) == BigRational(1, 9));
  CHECK(RationalExpr::pow(C(2, 3), 3)->eval(std::map<std::string, BigRational>{}) ==
        BigRational(8, 27));
}

TEST_CASE("clearing uses a least common denominator") {
  auto c = ctx();
  // 1/x + 1/x^2 == (x + 1)/x^2, not (x^2 + x)/x^3
  const ExprPtr e = C(1) / V("x") + C(1) / RationalExpr::pow(V("x"), 2);
  const ClearedFraction f = clear_denominators(e, c);
  CHECK(f.num == poly_from_text("x + 1", c));
  CHECK(f.den == poly_from_text("x^2", c));
}

TEST_CASE("clearing shares composite denominators factor-wise") {
  auto c = ctx();
  // x/(2y) - y/(4x) == (2x^2 - y^2)/(4xy)
  const ExprPtr e = V("x") / (C(2) * V("y")) - V("y") / (C(4) * V("x"));
  const ClearedFraction f = clear_denominators(e, c);
  CHECK(proportional_positive(poly_from_text("2*x^2 - y^2", c), f.num));
  CHECK(proportional_positive(poly_from_text("x*y", c), f.den));
  // exactness: num/den == e at a sample point
  std::map<std::string, BigRational> pt{{"x", BigRational(3)}, {"y", BigRational(5)}};
  const BigRational lhs = f.num.eval({BigRational(3), BigRational(5)}) /
                          f.den.eval({BigRational(3), BigRational(5)});
  CHECK(lhs == e->eval(pt));
}

TEST_CASE("polynomial atoms in denominators") {
  auto c = ctx();
  // 1/(x + 1) + 1/(2(x + 1)) == 3/(2(x + 1))
  const ExprPtr xp1 = V("x") + C(1);
  const ExprPtr e = C(1) / xp1 + C(1) / (C(2) * xp1);
  const ClearedFraction f = clear_denominators(e, c);
  CHECK(f.num == MultiPoly::constant(c, BigRational(3, 2)));
  CHECK(f.den == poly_from_text("x + 1", c));
}

TEST_CASE("all-negative denominators flip sign instead of failing") {
  auto c = ctx();
  const ExprPtr e = C(1) / (C(0) - V("x") - V("y"));
  const ClearedFraction f = clear_denominators(e, c);
  CHECK(f.den == poly_from_text("x + y", c));
  CHECK(f.num == MultiPoly::constant(c, BigRational(-1)));
}

TEST_CASE("mixed-sign denominators are rejected") {
  auto c = ctx();
  const ExprPtr e = C(1) / (V("x") - V("y"));
  CHECK_THROWS_AS(clear_denominators(e, c), UnsupportedDenominator);
  CHECK_THROWS_AS(clear_denominators(C(1) / (V("x") - C(1)), c), UnsupportedDenominator);
}

TEST_CASE("division by literal zero") {
  auto c = ctx();
  CHECK_THROWS_AS(clear_denominators(C(1) / (V("x") - V("x")), c), DivByZero);
}

TEST_CASE("canonical numerator") {
  auto c = ctx();
  // (y - x)/x^2: numerator sign flips under canonical normalization
  const ExprPtr e = (V("y") - V("x")) / RationalExpr::pow(V("x"), 2);
  CHECK(expr_to_poly_canonical(e, c) == poly_from_text("x - y", c));
  const ClearedFraction f = clear_denominators(e, c);
  CHECK(f.num == poly_from_text("y - x", c));  // sign preserved here
}

TEST_CASE("clearing matches evaluation on many points") {
  auto c = ctx();
  const ExprPtr e =
      V("x") / (C(2) * V("y")) + (V("y") * V("y")) / (C(4) * V("x") * (V("x") + C(1))) - C(1, 3);
  const ClearedFraction f = clear_denominators(e, c);
  for (long xs = 1; xs <= 4; ++xs)
    for (long ys = 1; ys <= 4; ++ys) {
      std::map<std::string, BigRational> pt{{"x", BigRational(xs, 3)}, {"y", BigRational(ys, 2)}};
      const std::vector<BigRational> v{BigRational(xs, 3), BigRational(ys, 2)};
      CHECK(f.num.eval(v) / f.den.eval(v) == e->eval(pt));
    }
}
