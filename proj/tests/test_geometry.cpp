#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "einsp/errors.hpp"
#include "einsp/geometry.hpp"

using namespace einsp;

namespace {

BigRational Q(long n, long d = 1) { return BigRational(n, d); }

std::vector<BigRational> random_point(std::mt19937& rng, std::size_t arity) {
  std::uniform_int_distribution<long> num(1, 20), den(1, 20);
  std::vector<BigRational> x;
  for (std::size_t i = 0; i < arity; ++i) x.emplace_back(num(rng), den(rng));
  return x;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate_spec(WallachSpec{1, 1, 1}));
  CHECK_NOTHROW(validate_spec(FlagSpec{3, 2}));
  CHECK_THROWS_AS(validate_spec(WallachSpec{0, 1, 1}), SpecError);
  CHECK_THROWS_AS(validate_spec(FlagSpec{3, 3}), SpecError);
  CHECK_THROWS_AS(validate_spec(FlagSpec{2, 2}), SpecError);
  CHECK_THROWS_AS(validate_spec(FlagSpec{3, 1}), SpecError);
  CHECK(spec_name(WallachSpec{1, 1, 2}) == "wallach(1,1,2)");
  CHECK(spec_name(FlagSpec{4, 3}) == "flag(4,3)");
}

TEST_CASE("summand dimensions") {
  CHECK(summand_dims(FlagSpec{3, 2}) == std::vector<long>{1, 3, 8, 6});
  CHECK(summand_dims(WallachSpec{1, 1, 1}) == std::vector<long>{3, 3, 4, 4, 4});
  CHECK(summand_dims(WallachSpec{2, 1, 3}) == std::vector<long>{10, 3, 8, 24, 12});
  // sp(k) has dimension k(2k+1); flag dims are (1, p^2-1, 4p(n-p), p(p+1))
  CHECK(summand_dims(FlagSpec{5, 3}) == std::vector<long>{1, 8, 24, 12});
  CHECK(summand_labels(WallachSpec{1, 1, 1}) ==
        std::vector<std::string>{"x1", "x2", "x12", "x13", "x23"});
  CHECK(summand_labels(FlagSpec{3, 2}) == std::vector<std::string>{"u0", "u1", "u2", "u3"});
}

TEST_CASE("structure constants: wallach(1,1,1)") {
  auto A = structure_constants(WallachSpec{1, 1, 1});
  CHECK(triple_value(A, 0, 0, 0) == Q(3, 2));   // sp(k1) self-bracket
  CHECK(triple_value(A, 2, 2, 0) == Q(3, 4));   // (p12, p12, sp(k1))
  CHECK(triple_value(A, 2, 4, 3) == Q(1, 2));   // (p12, p23, p13)
  CHECK(triple_value(A, 3, 2, 4) == Q(1, 2));   // symmetric closure
  CHECK(triple_value(A, 4, 3, 2) == Q(1, 2));
  CHECK(triple_value(A, 0, 1, 2) == Q(0));      // vanishing triple
  CHECK(A.size() == 7);
}

TEST_CASE("structure constants: flag(3,2)") {
  auto A = structure_constants(FlagSpec{3, 2});
  CHECK(triple_value(A, 2, 2, 0) == Q(1, 4));
  CHECK(triple_value(A, 3, 3, 0) == Q(3, 4));
  CHECK(triple_value(A, 1, 2, 2) == Q(3, 4));
  CHECK(triple_value(A, 1, 1, 1) == Q(3, 4));   // 2*6*(6+2-6)/32
  CHECK(triple_value(A, 1, 3, 3) == Q(3, 2));   // 2*6*4/32
  CHECK(triple_value(A, 3, 2, 2) == Q(3, 2));
  CHECK(A.size() == 6);
}

TEST_CASE("ricci at the all-ones point") {
  std::vector<BigRational> ones5(5, Q(1)), ones4(4, Q(1));
  auto rw = ricci_general(WallachSpec{1, 1, 1}, ones5);
  CHECK(rw == std::vector<BigRational>{Q(1, 4), Q(1, 4), Q(1, 4), Q(11, 32), Q(11, 32)});
  CHECK(ricci_closed_at(WallachSpec{1, 1, 1}, ones5) == rw);
  auto rf = ricci_general(FlagSpec{3, 2}, ones4);
  CHECK(rf == std::vector<BigRational>{Q(1, 4), Q(1, 4), Q(11, 32), Q(1, 4)});
  CHECK(ricci_closed_at(FlagSpec{3, 2}, ones4) == rf);
}

TEST_CASE("general formula equals closed form at random points") {
  std::mt19937 rng(771155);
  std::vector<FibrationSpec> specs = {WallachSpec{1, 1, 1}, WallachSpec{1, 1, 2},
                                      WallachSpec{2, 1, 3}, WallachSpec{2, 2, 2},
                                      FlagSpec{3, 2},       FlagSpec{5, 3},
                                      FlagSpec{6, 4},       FlagSpec{6, 2}};
  for (const auto& spec : specs) {
    const std::size_t arity = summand_labels(spec).size();
    for (int t = 0; t < 20; ++t) {
      auto x = random_point(rng, arity);
      CHECK(ricci_general(spec, x) == ricci_closed_at(spec, x));
    }
  }
}

TEST_CASE("ricci homogeneity: r(t*x) = r(x)/t") {
  std::mt19937 rng(20250912);
  for (const FibrationSpec spec :
       std::vector<FibrationSpec>{WallachSpec{2, 1, 1}, FlagSpec{4, 2}}) {
    const std::size_t arity = summand_labels(spec).size();
    auto x = random_point(rng, arity);
    const BigRational t(3, 2);
    auto xs = x;
    for (auto& c : xs) c *= t;
    auto r = ricci_general(spec, x);
    auto rs = ricci_general(spec, xs);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(rs[i] == r[i] / t);
  }
}

TEST_CASE("swap symmetry for k1 = k2") {
  std::mt19937 rng(99);
  const WallachSpec spec{2, 2, 1};
  for (int t = 0; t < 10; ++t) {
    auto x = random_point(rng, 5);
    // exchange x1<->x2 and x13<->x23
    std::vector<BigRational> y = {x[1], x[0], x[2], x[4], x[3]};
    auto rx = ricci_general(spec, x);
    auto ry = ricci_general(spec, y);
    CHECK(ry[0] == rx[1]);
    CHECK(ry[1] == rx[0]);
    CHECK(ry[2] == rx[2]);
    CHECK(ry[3] == rx[4]);
    CHECK(ry[4] == rx[3]);
  }
}

TEST_CASE("symbolic flag form specializes to the numeric one") {
  auto sym = flag_ricci_symbolic();
  REQUIRE(sym.size() == 4);
  std::mt19937 rng(4242);
  for (long n = 3; n <= 6; ++n)
    for (long p = 2; p < n; ++p) {
      auto x = random_point(rng, 4);
      std::map<std::string, BigRational> pt{{"u0", x[0]}, {"u1", x[1]},  {"u2", x[2]},
                                            {"u3", x[3]}, {"n", Q(n)},   {"p", Q(p)}};
      auto direct = ricci_closed_at(FlagSpec{n, p}, x);
      for (int i = 0; i < 4; ++i) CHECK(sym[i]->eval(pt) == direct[i]);
    }
}

TEST_CASE("domain errors") {
  std::vector<BigRational> bad = {Q(1), Q(0), Q(1), Q(1), Q(1)};
  CHECK_THROWS_AS(ricci_general(WallachSpec{1, 1, 1}, bad), DomainError);
  std::vector<BigRational> short_pt = {Q(1), Q(1)};
  CHECK_THROWS_AS(ricci_general(WallachSpec{1, 1, 1}, short_pt), DomainError);
  CHECK_THROWS_AS(ricci_closed_at(FlagSpec{3, 2}, short_pt), DomainError);
}
