#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "einsp/interval.hpp"
#include "einsp/rational.hpp"

using namespace einsp;

TEST_CASE("construction and canonical form") {
  CHECK(BigRational(2, 4) == BigRational(1, 2));
  CHECK(BigRational(-2, 4) == BigRational(1, -2));
  CHECK(BigRational(0, 7) == BigRational(0));
  CHECK(BigRational(6, 3).is_integer());
  CHECK(BigRational(6, 3).num() == 2);
  CHECK_THROWS_AS(BigRational(1, 0), DivByZero);
}

TEST_CASE("string parsing") {
  CHECK(BigRational("3/4") == BigRational(3, 4));
  CHECK(BigRational("-12") == BigRational(-12));
  CHECK(BigRational("0.25") == BigRational(1, 4));
  CHECK(BigRational("1e-12") == BigRational(BigInt(1), int_pow(10, 12)));
  CHECK(BigRational("2.5e3") == BigRational(2500));
  CHECK_THROWS_AS(BigRational("x"), ParseError);
  CHECK_THROWS_AS(BigRational("1/0"), DivByZero);
}

TEST_CASE("arithmetic") {
  const BigRational a(1, 2), b(1, 3);
  CHECK(a + b == BigRational(5, 6));
  CHECK(a - b == BigRational(1, 6));
  CHECK(a * b == BigRational(1, 6));
  CHECK(a / b == BigRational(3, 2));
  CHECK(-a == BigRational(-1, 2));
  CHECK_THROWS_AS(a / BigRational(0), DivByZero);
  CHECK(BigRational::pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(BigRational::pow(BigRational(2, 3), -2) == BigRational(9, 4));
  CHECK(BigRational::pow(BigRational(5), 0) == BigRational(1));
}

TEST_CASE("comparisons and sign") {
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK(BigRational(-1, 3) > BigRational(-1, 2));
  CHECK(BigRational(-5).sign() == -1);
  CHECK(BigRational(0).sign() == 0);
  CHECK(BigRational(-7, 2).abs() == BigRational(7, 2));
}

TEST_CASE("decimal rendering") {
  CHECK(BigRational(1, 4).decimal(6) == "0.250000");
  CHECK(BigRational(-1, 4).decimal(2) == "-0.25");
  CHECK(BigRational(1, 3).decimal(6) == "0.333333");
  CHECK(BigRational(2, 3).decimal(6) == "0.666667");
  CHECK(BigRational(1, 2).decimal(0) == "1");     // half away from zero
  CHECK(BigRational(-1, 2).decimal(0) == "-1");
  CHECK(BigRational(7).decimal(3) == "7.000");
  CHECK(BigRational(12345, 100).decimal(1) == "123.5");
}

TEST_CASE("str round trip") {
  const BigRational q(-355, 113);
  CHECK(q.str() == "-355/113");
  CHECK(BigRational(q.str()) == q);
  CHECK(BigRational(17).str() == "17");
}

TEST_CASE("interval arithmetic basics") {
  const RatInterval a(BigRational(1), BigRational(2));
  const RatInterval b(BigRational(-1), BigRational(3));
  CHECK(iv_add(a, b).lo == BigRational(0));
  CHECK(iv_add(a, b).hi == BigRational(5));
  CHECK(iv_sub(a, a).contains_zero());
  const RatInterval m = iv_mul(a, b);
  CHECK(m.lo == BigRational(-2));
  CHECK(m.hi == BigRational(6));
  CHECK_THROWS_AS(iv_div(a, b), DivByZero);
  const RatInterval d = iv_div(b, a);
  CHECK(d.lo == BigRational(-1));
  CHECK(d.hi == BigRational(3));
}

TEST_CASE("interval powers") {
  const RatInterval s(BigRational(-2), BigRational(3));
  CHECK(iv_pow(s, 2).lo == BigRational(0));
  CHECK(iv_pow(s, 2).hi == BigRational(9));
  CHECK(iv_pow(s, 3).lo == BigRational(-8));
  CHECK(iv_pow(s, 3).hi == BigRational(27));
  CHECK(iv_pow(s, 0).is_point());
  const RatInterval n(BigRational(-3), BigRational(-2));
  CHECK(iv_pow(n, 2).lo == BigRational(4));
  CHECK(iv_pow(n, 2).hi == BigRational(9));
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(RatInterval(BigRational(2), BigRational(1)), InvalidInterval);
  const RatInterval p = RatInterval::point(BigRational(5, 7));
  CHECK(p.is_point());
  CHECK(p.width().is_zero());
  CHECK(p.mid() == BigRational(5, 7));
}
