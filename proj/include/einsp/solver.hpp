#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "einsp/geometry.hpp"
#include "einsp/groebner.hpp"
#include "einsp/interval.hpp"
#include "einsp/multipoly.hpp"
#include "einsp/unipoly.hpp"

namespace einsp {

// Polynomial form of the Einstein condition in the gauge where the last
// summand coefficient equals 1.  Each polynomial is (positive denominator) *
// (consecutive Ricci difference), so the positive zero sets agree.
struct EinsteinSystem {
  FibrationSpec spec;
  VarCtxPtr ctx;                        // remaining unknowns, summand order
  std::string normalized_variable;      // x23 or u3, substituted by 1
  std::vector<MultiPoly> polys;         // primitive, count = summands - 1
  std::vector<std::string> provenance;  // difference each one came from, "r1 - r2"
};

// Wallach: (r1-r2, r2-r12, r12-r13, r13-r23) over (x1, x2, x12, x13).
// Flag: (r0-r1, r1-r2, r2-r3) over (u0, u1, u2).
EinsteinSystem assemble_system(const FibrationSpec& spec);

// Flag system with n and p kept as ring variables, over (u0, u1, u2, n, p).
EinsteinSystem assemble_flag_symbolic();

// Enough of the elimination data to re-derive a solution's coordinates at any
// precision: one isolating interval for the eliminant root plus the lex basis
// the remaining coordinates are back-substituted through.
struct SolutionDerivation {
  VarCtxPtr ctx;                     // branch unknowns
  MonomialOrder lex;                 // order of `elems`
  std::vector<MultiPoly> elems;      // reduced lex basis
  std::size_t root_var = 0;          // least significant variable under lex
  UniPoly sqfree;                    // squarefree eliminant factor with the root
  IsolatingInterval root;
  // variables pinned by the branch (e.g. x13 = 1), name -> value
  std::vector<std::pair<std::string, BigRational>> pinned;
};

struct EinsteinSolution {
  std::vector<std::string> vars;          // summand labels, normalized var last
  std::vector<IsolatingInterval> coords;  // strictly positive enclosures
  RatInterval lambda;                     // enclosure of the Einstein constant
  BigRational residual_bound;             // upper bound on max |r_i - r_j|
  bool certified = false;
  std::string classification = "Unclassified";  // New | Jensen | ADN | Unclassified
  std::string branch = "generic";
  std::optional<std::size_t> symmetry_partner;  // index into the returned list
  std::shared_ptr<const SolutionDerivation> derivation;
};

struct SolveOptions {
  BigRational tol = BigRational(1, 1000000000);  // residual certification target
  BigRational ctol = BigRational(1, 100000000);  // classification tolerance
  Budget* budget = nullptr;
  bool generic_branch = true;  // saturated system, normalized-equal locus removed
  bool special_branch = true;  // the x13 = 1 / u1 = 1 system
};

// assemble -> saturate -> grevlex basis -> lex conversion -> eliminant ->
// isolate positive roots -> back-substitute -> certify -> classify, run on
// the generic branch (all coordinates and the normalized-equal factor
// nonzero) and on the special branch, merged and sorted by (branch, root).
// Solutions whose residual bound misses opts.tol are returned with
// certified = false rather than dropped.
std::vector<EinsteinSolution> solve_einstein(const FibrationSpec& spec,
                                             const SolveOptions& opts = {});

// Evaluates all Ricci components over the coordinate box with exact interval
// arithmetic and returns an upper bound on max |r_i - r_j|.  While the bound
// misses `tol` and the solution carries its derivation, the eliminant root is
// tightened and the bound recomputed.  Updates residual_bound, lambda and
// certified.
BigRational certify(EinsteinSolution& sol, const FibrationSpec& spec,
                    const BigRational& tol, Budget* budget = nullptr);

// Interval-midpoint classification at tolerance ctol.  Wallach solutions on
// the x13 = 1 branch: Jensen when x1 = x2 = x12, ADN when only x1 = x2;
// other branches are New.  Flag: Jensen when u0 = u1, u0 = u3 or u1 = u3.
std::string classify(const EinsteinSolution& sol, const FibrationSpec& spec,
                     const BigRational& ctol);

// One census line; conjectured columns are the tabulated guesses the run is
// compared against (their New column folds ADN in), present only for the n
// the table covers.  Reported, never asserted.
struct CensusRow {
  long n = 0;
  long jensen = 0;
  long adn = 0;
  long new_metrics = 0;
  bool complete = true;  // false when the budget ran out on this row
  std::optional<long> conjectured_jensen;
  std::optional<long> conjectured_new;
};

// family is "n-2,1,1" (k = (n-2, 1, 1), n >= 3) or "n-3,1,2"
// (k = (n-3, 1, 2), n >= 4).
std::vector<CensusRow> census(const std::string& family, long n_max,
                              const SolveOptions& opts = {});

}  // namespace einsp
