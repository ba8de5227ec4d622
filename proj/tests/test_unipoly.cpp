#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "einsp/unipoly.hpp"

using namespace einsp;

namespace {

UniPoly up(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<BigRational> c;
  for (long v : coeffs_low_to_high) c.emplace_back(v);
  return UniPoly(std::move(c));
}

// (x - r1)(x - r2)... for integer roots
UniPoly from_roots(std::initializer_list<long> roots) {
  UniPoly f = UniPoly::constant(BigRational(1));
  for (long r : roots) f = f * up({-r, 1});
  return f;
}

}  // namespace

TEST_CASE("basics") {
  const UniPoly f = up({6, -7, 0, 1});  // x^3 - 7x + 6 = (x-1)(x-2)(x+3)
  CHECK(f.degree() == 3);
  CHECK(f.eval(BigRational(1)).is_zero());
  CHECK(f.eval(BigRational(0)) == BigRational(6));
  CHECK(f.derivative() == up({-7, 0, 3}));
  CHECK(UniPoly().is_zero());
  CHECK(up({0}).is_zero());
  CHECK_THROWS_AS(UniPoly().leading_coeff(), ZeroPolyError);
}

TEST_CASE("division") {
  const UniPoly a = from_roots({1, 2, -3});
  const UniPoly b = from_roots({2});
  UniPoly rem;
  const UniPoly q = UniPoly::divmod(a, b, rem);
  CHECK(rem.is_zero());
  CHECK(q == from_roots({1, -3}));
  CHECK(a.exact_divide(b) == q);
  CHECK_THROWS_AS(a.exact_divide(up({1, 1, 1})), RemainderError);
  CHECK_THROWS_AS(a.exact_divide(UniPoly()), DivByZero);

  UniPoly r2;
  UniPoly::divmod(up({1, 0, 1}), up({1, 1}), r2);  // x^2+1 = (x-1)(x+1) + 2
  CHECK(r2 == up({2}));
}

TEST_CASE("gcd and squarefree part") {
  const UniPoly f = from_roots({1, 1, -2});  // (x-1)^2 (x+2)
  CHECK(UniPoly::gcd(f, f.derivative()) == from_roots({1}));
  CHECK(f.squarefree_part() == from_roots({1, -2}));
  CHECK(UniPoly::gcd(from_roots({1, -1, -2}), from_roots({1, 3})) == from_roots({1}));
  CHECK(UniPoly::gcd(up({2}), from_roots({5})) == UniPoly::constant(BigRational(1)));
  // scaling does not change the canonical gcd
  CHECK(UniPoly::gcd(f.scaled(BigRational(-7, 3)), f) == f.canonical());
}

TEST_CASE("sturm counting") {
  const UniPoly f = from_roots({1, 2, -3});
  const SturmChain chain = sturm_chain(f);
  CHECK(sturm_count(chain, BigRational(0), BigRational(5, 2)) == 2);
  CHECK(sturm_count(chain, BigRational(-4), BigRational(0)) == 1);
  CHECK(sturm_count(chain, BigRational(-4), BigRational(4)) == 3);
  // half-open semantics: root at the right endpoint is rejected, not counted
  CHECK_THROWS_AS(sturm_count(chain, BigRational(1), BigRational(4)), EndpointRoot);
  CHECK_THROWS_AS(sturm_count(chain, BigRational(0), BigRational(2)), EndpointRoot);
  // multiple roots are counted once
  const UniPoly g = from_roots({1, 1, 1, 4});
  CHECK(sturm_count(sturm_chain(g), BigRational(0), BigRational(5)) == 2);
}

TEST_CASE("sturm additivity property") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> coef(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 25; ++trial) {
    std::vector<BigRational> cs;
    for (int i = 0; i < 6; ++i) cs.emplace_back(coef(rng));
    const UniPoly f(std::move(cs));
    if (f.degree() < 2) continue;
    const SturmChain chain = sturm_chain(f);
    const BigRational a(-17, 3), b(1, 7), c(23, 5);
    try {
      const int whole = sturm_count(chain, a, c);
      const int parts = sturm_count(chain, a, b) + sturm_count(chain, b, c);
      CHECK(whole == parts);
      ++checked;
    } catch (const EndpointRoot&) {
      continue;  // random poly vanished at a probe point; skip
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("cauchy bound dominates roots") {
  const UniPoly f = from_roots({3, -5, 7});
  const BigRational b = cauchy_root_bound(f);
  CHECK(b > BigRational(7));
  CHECK(f.eval(b).sign() != 0);
  CHECK(sturm_count(sturm_chain(f), -b, b) == 3);
}

TEST_CASE("isolation, positive roots only") {
  const UniPoly f = from_roots({1, 2, -3});
  IsolationOptions opt;
  opt.positive_only = true;
  opt.target_width = BigRational(1, 1000);
  const auto roots = isolate_real_roots(f, opt);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo < BigRational(1));
  CHECK(roots[0].hi >= BigRational(1));
  CHECK(roots[1].lo < BigRational(2));
  CHECK(roots[1].hi >= BigRational(2));
  for (const auto& iv : roots) CHECK(iv.width() <= BigRational(1, 1000));
}

TEST_CASE("isolation over the whole line with a zero root") {
  // x (x^2 - 2)
  const UniPoly f = up({0, -2, 0, 1});
  IsolationOptions opt;
  opt.target_width = BigRational(1, 1 << 20);
  const auto roots = isolate_real_roots(f, opt);
  REQUIRE(roots.size() == 3);
  // ascending and disjoint
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
  CHECK(roots[1].exact.value() == BigRational(0));
  // middle of the outer intervals squares to 2 within tolerance
  const BigRational lo2 = roots[2].lo * roots[2].lo, hi2 = roots[2].hi * roots[2].hi;
  CHECK(lo2 < BigRational(2));
  CHECK(BigRational(2) < hi2);
}

TEST_CASE("rational root found exactly when bisection lands on it") {
  // (2x - 1)(x^2 - 3)
  const UniPoly f = up({3, -6, -1, 2});
  IsolationOptions opt;
  opt.positive_only = true;
  opt.target_width = BigRational(1, 1000000);
  const auto roots = isolate_real_roots(f, opt);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].exact.value() == BigRational(1, 2));
  CHECK(!roots[1].exact);
}

TEST_CASE("refinement tightens without losing the root") {
  const UniPoly f = up({-2, 0, 1});  // x^2 - 2
  IsolationOptions opt;
  opt.positive_only = true;
  auto roots = isolate_real_roots(f, opt);
  REQUIRE(roots.size() == 1);
  const BigRational w("1e-12");
  const IsolatingInterval iv = refine_root(f, roots[0], w);
  CHECK(iv.width() <= w);
  CHECK(iv.lo * iv.lo < BigRational(2));
  CHECK(BigRational(2) < iv.hi * iv.hi);
}

TEST_CASE("multiplicities do not break isolation") {
  const UniPoly f = from_roots({2, 2, 2, -1, -1});
  IsolationOptions opt;
  const auto roots = isolate_real_roots(f, opt);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo < BigRational(-1));
  CHECK(roots[1].hi >= BigRational(2));
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(isolate_real_roots(UniPoly(), IsolationOptions{}), ZeroPolyError);
  CHECK(isolate_real_roots(up({5}), IsolationOptions{}).empty());
  CHECK_THROWS_AS(sturm_chain(UniPoly()), ZeroPolyError);
  CHECK_THROWS_AS(cauchy_root_bound(UniPoly()), ZeroPolyError);
}

TEST_CASE("budget interrupts refinement") {
  const UniPoly f = up({-2, 0, 1});
  IsolationOptions opt;
  opt.positive_only = true;
  auto roots = isolate_real_roots(f, opt);
  Budget tiny(0.0, 3);
  CHECK_THROWS_AS(refine_root(f, roots[0], BigRational("1e-40"), &tiny), BudgetExceeded);
}
