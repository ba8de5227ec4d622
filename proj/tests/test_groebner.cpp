#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "einsp/groebner.hpp"
#include "einsp/polyio.hpp"

using namespace einsp;

namespace {

std::vector<MultiPoly> parse_all(const VarCtxPtr& c, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(poly_from_text(t, c));
  return out;
}

}  // namespace

TEST_CASE("normal form against a non-basis list") {
  auto c = VarContext::make({"x", "y"});
  const auto lexo = MonomialOrder::lex(c, {"x", "y"});
  const MultiPoly f = poly_from_text("x^2*y", c);
  const MultiPoly r = normal_form(f, parse_all(c, {"x - y"}), lexo);
  CHECK(r == poly_from_text("y^3", c));
  // f - r is in the ideal: reduce again and compare
  CHECK(normal_form(f - r, parse_all(c, {"x - y"}), lexo).is_zero());
  CHECK(normal_form(MultiPoly::zero(c), parse_all(c, {"x - y"}), lexo).is_zero());
}

TEST_CASE("simple lex basis") {
  auto c = VarContext::make({"x", "y"});
  const auto gb = buchberger(c, parse_all(c, {"x^2 + y^2 - 1", "x - y"}),
                             MonomialOrder::lex(c, {"x", "y"}));
  REQUIRE(gb.elems.size() == 2);
  CHECK(gb.elems[0] == poly_from_text("2*y^2 - 1", c));
  CHECK(gb.elems[1] == poly_from_text("x - y", c));
  CHECK(is_reduced_basis(gb));
  CHECK(is_groebner_basis(gb));
}

TEST_CASE("unit ideal collapses to 1") {
  auto c = VarContext::make({"x", "y"});
  const auto gb =
      buchberger(c, parse_all(c, {"x*y - 1", "x^2"}), MonomialOrder::lex(c, {"x", "y"}));
  REQUIRE(gb.elems.size() == 1);
  CHECK(gb.elems[0] == MultiPoly::constant(c, BigRational(1)));
}

TEST_CASE("generators reduce to zero modulo their basis") {
  auto c = VarContext::make({"x", "y", "z"});
  const auto gens = parse_all(c, {"x^2 - y", "x^3 - z", "x*y*z - 2"});
  for (auto kind : {MonomialOrder::lex(c, {"x", "y", "z"}), MonomialOrder::grevlex_natural(c)}) {
    const auto gb = buchberger(c, gens, kind);
    CHECK(is_reduced_basis(gb));
    CHECK(is_groebner_basis(gb));
    for (const auto& g : gens) CHECK(normal_form(g, gb.elems, gb.order).is_zero());
  }
}

TEST_CASE("elimination via lex") {
  auto c = VarContext::make({"x", "y", "z"});
  // twisted-cubic style: x^2 = y, x^3 = z implies y^3 = z^2
  const auto gb = buchberger(c, parse_all(c, {"x^2 - y", "x^3 - z"}),
                             MonomialOrder::lex(c, {"x", "y", "z"}));
  bool found = false;
  for (const auto& e : gb.elems)
    if (!e.uses_var(0) && e == poly_from_text("y^3 - z^2", c)) found = true;
  CHECK(found);
}

TEST_CASE("fglm agrees with the direct lex computation") {
  auto c = VarContext::make({"x", "y"});
  const auto gens = parse_all(c, {"x^2 + y^2 - 4", "x*y - 1"});
  const auto lexo = MonomialOrder::lex(c, {"x", "y"});
  const auto direct = buchberger(c, gens, lexo);
  const auto grev = buchberger(c, gens, MonomialOrder::grevlex_natural(c));
  const auto converted = fglm_to_lex(grev, lexo);
  REQUIRE(direct.elems.size() == converted.elems.size());
  for (std::size_t i = 0; i < direct.elems.size(); ++i)
    CHECK(direct.elems[i] == converted.elems[i]);
  CHECK(is_reduced_basis(converted));
  CHECK(is_groebner_basis(converted));

  const auto via = lex_basis(c, gens, lexo);
  REQUIRE(via.elems.size() == direct.elems.size());
  for (std::size_t i = 0; i < direct.elems.size(); ++i) CHECK(via.elems[i] == direct.elems[i]);
}

TEST_CASE("staircase and eliminant of a zero-dimensional ideal") {
  auto c = VarContext::make({"x", "y"});
  const auto gens = parse_all(c, {"x^2 + y^2 - 4", "x*y - 1"});
  const auto grev = buchberger(c, gens, MonomialOrder::grevlex_natural(c));
  const auto stair = quotient_staircase(grev);
  CHECK(stair.size() == 4);

  const auto lexgb = fglm_to_lex(grev, MonomialOrder::lex(c, {"x", "y"}));
  const UniPoly h = eliminant(lexgb, c->index_of("y"));
  // y^4 - 4 y^2 + 1
  REQUIRE(h.degree() == 4);
  CHECK(h.coeff(4) == BigRational(1));
  CHECK(h.coeff(3) == BigRational(0));
  CHECK(h.coeff(2) == BigRational(-4));
  CHECK(h.coeff(1) == BigRational(0));
  CHECK(h.coeff(0) == BigRational(1));
}

TEST_CASE("positive-dimensional ideals are detected") {
  auto c = VarContext::make({"x", "y"});
  const auto gb = buchberger(c, parse_all(c, {"x*y - 1"}), MonomialOrder::grevlex_natural(c));
  CHECK_THROWS_AS(quotient_staircase(gb), NotZeroDimensional);
  CHECK_THROWS_AS(fglm_to_lex(gb, MonomialOrder::lex(c, {"x", "y"})), NotZeroDimensional);
  CHECK_THROWS_AS(eliminant(gb, 0), NotZeroDimensional);
}

TEST_CASE("saturation removes a component") {
  auto c = VarContext::make({"x", "y"});
  // V(xy) = {x=0} u {y=0}; saturating by x keeps only {y=0}
  const auto sat = saturate_nonzero(c, parse_all(c, {"x*y"}), {poly_from_text("x", c)});
  CHECK(sat.ctx->arity() == 3);
  CHECK(sat.ctx->name(sat.aux_index) == "z");
  const auto gb = buchberger(sat.ctx, sat.gens, MonomialOrder::lex(sat.ctx, {"z", "x", "y"}));
  CHECK(normal_form(poly_from_text("y", sat.ctx), gb.elems, gb.order).is_zero());
  CHECK(!normal_form(poly_from_text("x", sat.ctx), gb.elems, gb.order).is_zero());
}

TEST_CASE("aux variable name avoids collisions") {
  auto c = VarContext::make({"z", "y"});
  const auto sat = saturate_nonzero(c, parse_all(c, {"z*y"}), {poly_from_text("y", c)});
  CHECK(sat.ctx->name(sat.aux_index) == "z_");
}

TEST_CASE("budget aborts long runs") {
  auto c = VarContext::make({"x", "y", "z"});
  Budget tiny(0.0, 2);
  CHECK_THROWS_AS(buchberger(c,
                             parse_all(c, {"x^4 + y^3 - z", "x*y*z - y^2 + 1", "y^5 + z^4 - x"}),
                             MonomialOrder::grevlex_natural(c), &tiny),
                  BudgetExceeded);
}

TEST_CASE("stats are recorded") {
  auto c = VarContext::make({"x", "y"});
  const auto gb = buchberger(c, parse_all(c, {"x^2 + y^2 - 4", "x*y - 1"}),
                             MonomialOrder::grevlex_natural(c));
  CHECK(gb.stats.pairs_processed > 0);
}
