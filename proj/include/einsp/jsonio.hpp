#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "einsp/geometry.hpp"
#include "einsp/groebner.hpp"
#include "einsp/proofs.hpp"
#include "einsp/solver.hpp"

namespace einsp {

// Emitters for the command-line tool.  Keys appear in a fixed order and every
// exact rational is a "p/q" string, so equal values serialize to identical
// bytes; approximate fields are fixed-point decimal strings.
using Json = nlohmann::ordered_json;

// {"interval": ["p/q", "p/q"], "approx": "0.568722"} (midpoint decimal)
Json interval_json(const RatInterval& iv, int digits);

// solution record: {spec, branch, certified, coords:{var:{interval, approx}},
// lambda, residual_bound, class, symmetry_partner}
Json solution_json(const FibrationSpec& spec, const EinsteinSolution& sol, int digits);
// {spec, count, solutions:[...]}
Json solve_json(const FibrationSpec& spec, const std::vector<EinsteinSolution>& sols,
                int digits);

// {spec, vars, normalized, polys:[text], provenance}
Json system_json(const EinsteinSystem& sys);

// {spec, metric:{label: "p/q"}, components:{label:{exact, float}}}
Json ricci_json(const FibrationSpec& spec, const std::vector<BigRational>& metric,
                const std::vector<BigRational>& components, int digits);

// Ideal document {vars:[...], order:{kind, precedence:[names]}, polys:[text]}.
struct IdealInput {
  VarCtxPtr ctx;
  MonomialOrder order;
  std::vector<MultiPoly> polys;
};
IdealInput ideal_from_json(const Json& doc);
Json ideal_json(const VarCtxPtr& ctx, const MonomialOrder& order,
                const std::vector<MultiPoly>& polys);
// ideal document of the basis plus {stats:{pairs, reductions_to_zero, ...}}
Json basis_json(const GroebnerBasis& gb);

// {var, degree, count, roots:[{interval, approx, exact}]}
Json roots_json(const std::string& var, const UniPoly& poly,
                const std::vector<IsolatingInterval>& roots, int digits);

// {family, rows:[{n, jensen, adn, new, complete, conjectured...}]}
Json census_json(const std::string& family, const std::vector<CensusRow>& rows);

Json identity_json(const IdentityReport& report);
Json expansion_json(const ExpansionReport& report);

// exact upper bound: smallest decimal with `digits` fractional places >= v
std::string decimal_upper(const BigRational& v, int digits);

// 2-space indentation, trailing newline
std::string json_text(const Json& doc);

}  // namespace einsp
