#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "einsp/interval.hpp"
#include "einsp/multipoly.hpp"
#include "einsp/polyio.hpp"

using namespace einsp;

namespace {

VarCtxPtr ctx3() { return VarContext::make({"x", "y", "z"}); }

MultiPoly parse(const std::string& s, const VarCtxPtr& c) { return poly_from_text(s, c); }

}  // namespace

TEST_CASE("context basics") {
  auto c = ctx3();
  CHECK(c->arity() == 3);
  CHECK(c->index_of("y") == 1);
  CHECK(!c->find("w"));
  CHECK_THROWS_AS(c->index_of("w"), ContextError);
  CHECK_THROWS_AS(VarContext::make({"a", "a"}), ContextError);
  auto c2 = VarContext::make({"x", "y", "z"});
  CHECK(same_context(c, c2));
}

TEST_CASE("monomial order: lex with precedence") {
  auto c = ctx3();
  const auto lex = MonomialOrder::lex(c, {"z", "x", "y"});
  const Monomial mx = Monomial::var(3, 0), my = Monomial::var(3, 1), mz = Monomial::var(3, 2);
  CHECK(lex.less(mx, mz));
  CHECK(lex.less(my, mx));
  CHECK(lex.cmp(mz, mz) == 0);
  // z dominates any power of x
  CHECK(lex.less(Monomial::var(3, 0, 9), mz));
  CHECK_THROWS_AS(MonomialOrder::lex(c, {"z", "x"}), ContextError);
  CHECK_THROWS_AS(MonomialOrder::lex(c, std::vector<std::string>{"z", "x", "x"}), ContextError);
}

TEST_CASE("monomial order: grevlex") {
  auto c = ctx3();
  const auto g = MonomialOrder::grevlex_natural(c);
  // degree first
  CHECK(g.less(Monomial::var(3, 2, 1), Monomial::var(3, 0, 2)));
  // same degree: x^2 > xy > y^2 > xz > yz > z^2
  auto mk = [&](int a, int b, int cc) {
    Monomial m(3);
    m.exps = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
              static_cast<std::uint16_t>(cc)};
    m.deg = static_cast<std::uint32_t>(a + b + cc);
    return m;
  };
  CHECK(g.less(mk(1, 1, 0), mk(2, 0, 0)));
  CHECK(g.less(mk(0, 2, 0), mk(1, 1, 0)));
  CHECK(g.less(mk(1, 0, 1), mk(0, 2, 0)));
  CHECK(g.less(mk(0, 1, 1), mk(1, 0, 1)));
  CHECK(g.less(mk(0, 0, 2), mk(0, 1, 1)));
}

TEST_CASE("arithmetic and normalization") {
  auto c = ctx3();
  const MultiPoly f = parse("x^2 + 2*x*y - 3", c);
  const MultiPoly g = parse("x*y - 3 + y", c);
  CHECK(f + g == parse("x^2 + 3*x*y + y - 6", c));
  CHECK(f - f == MultiPoly::zero(c));
  CHECK((f - f).is_zero());
  CHECK(f * MultiPoly::zero(c) == MultiPoly::zero(c));
  CHECK(parse("(x + y)^2", c) == parse("x^2 + 2*x*y + y^2", c));
  CHECK(f.scaled(BigRational(-2)) == parse("-2*x^2 - 4*x*y + 6", c));
}

TEST_CASE("product expands correctly") {
  auto c = ctx3();
  const MultiPoly f = parse("x - y", c);
  const MultiPoly g = parse("x + y", c);
  CHECK(f * g == parse("x^2 - y^2", c));
  const MultiPoly h = parse("x + y + z", c);
  CHECK(h.pow(3).term_count() == 10);
  CHECK(h.pow(3).eval({BigRational(1), BigRational(1), BigRational(1)}) == BigRational(27));
}

TEST_CASE("evaluation and substitution") {
  auto c = ctx3();
  const MultiPoly f = parse("x^2*y - 3*z + 1/2", c);
  CHECK(f.eval({BigRational(2), BigRational(3), BigRational(1, 3)}) == BigRational(23, 2));
  CHECK(f.substitute(2, BigRational(0)) == parse("x^2*y + 1/2", c));
  const MultiPoly sub = f.substitute(0, parse("y + z", c));
  CHECK(sub == parse("y^3 + 2*y^2*z + y*z^2 - 3*z + 1/2", c));
  CHECK_THROWS_AS(f.eval({BigRational(1)}), EvalError);
}

TEST_CASE("content and canonical form") {
  auto c = ctx3();
  const MultiPoly f = parse("4/3*x - 2/3*y", c);
  CHECK(f.content() == BigRational(2, 3));
  CHECK(f.primitive_sign_preserved() == parse("2*x - y", c));
  const MultiPoly g = parse("-4*x + 2*y", c);
  CHECK(g.primitive_sign_preserved() == parse("-2*x + y", c));
  CHECK(g.canonical() == parse("2*x - y", c));
  CHECK(g.canonical().leading_term(MonomialOrder::grevlex_natural(c)).c.sign() > 0);
}

TEST_CASE("leading term depends on the order") {
  auto c = ctx3();
  const MultiPoly f = parse("x*y^2 + z^4", c);
  CHECK(f.leading_term(MonomialOrder::grevlex_natural(c)).m ==
        Monomial::var(3, 2, 4));
  const auto lexx = MonomialOrder::lex(c, {"x", "y", "z"});
  Monomial xy2(3);
  xy2.exps = {1, 2, 0};
  xy2.deg = 3;
  CHECK(f.leading_term(lexx).m == xy2);
}

TEST_CASE("reindexing between contexts") {
  auto small = VarContext::make({"x", "y"});
  auto big = VarContext::make({"w", "y", "x"});
  const MultiPoly f = parse("x^2 - y", small);
  const MultiPoly g = f.reindexed(big);
  CHECK(g == parse("x^2 - y", big));
  CHECK(g.reindexed(small) == f);
  const MultiPoly uses_w = parse("w", big);
  CHECK_THROWS_AS(uses_w.reindexed(small), ContextError);
}

TEST_CASE("proportionality detection") {
  auto c = ctx3();
  const MultiPoly f = parse("2*x - 3*y", c);
  CHECK(proportional_positive(f, parse("4*x - 6*y", c)));
  CHECK(!proportional_positive(f, parse("-2*x + 3*y", c)));
  CHECK(proportionality_ratio(f, parse("-x + 3/2*y", c)).value() == BigRational(-1, 2));
  CHECK(!proportionality_ratio(f, parse("2*x - 3*y + 1", c)));
  CHECK(!proportionality_ratio(f, parse("2*x - 2*y", c)));
}

TEST_CASE("interval evaluation contains exact values") {
  auto c = ctx3();
  const MultiPoly f = parse("x^2*y - z^3 + x*z - 5", c);
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigRational> pt;
    std::vector<RatInterval> box;
    for (int i = 0; i < 3; ++i) {
      const BigRational v(num(rng), 7);
      pt.push_back(v);
      box.emplace_back(v - BigRational(1, 100), v + BigRational(1, 100));
    }
    const BigRational exact = f.eval(pt);
    const RatInterval iv = eval_poly(f, box);
    CHECK(iv.contains(exact));
  }
}

TEST_CASE("homogeneous degrees") {
  auto c = ctx3();
  const MultiPoly f = parse("x^3*y - 7*z^2 + y", c);
  CHECK(f.total_degree() == 4);
  CHECK(f.degree_in(0) == 3);
  CHECK(f.degree_in(2) == 2);
  CHECK(f.uses_var(1));
  CHECK(!parse("x + z", c).uses_var(1));
}
