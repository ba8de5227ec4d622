#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "einsp/multipoly.hpp"
#include "einsp/unipoly.hpp"

namespace einsp {

struct GBStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t reductions_to_zero = 0;
  std::uint64_t basis_size_peak = 0;
  std::uint64_t fglm_candidates = 0;
};

// Reduced Groebner basis: elements primitive with positive leading
// coefficient, sorted by leading term ascending under `order`.
struct GroebnerBasis {
  VarCtxPtr ctx;
  MonomialOrder order;
  std::vector<MultiPoly> elems;
  GBStats stats;
};

// Remainder of f after full reduction by `basis` under `order`.  No
// rescaling: f - result lies in the ideal generated by `basis`.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order);

// Buchberger with the coprime and chain criteria (Gebauer-Moeller pair
// update), normal selection strategy.  Deterministic.
GroebnerBasis buchberger(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                         const MonomialOrder& order, Budget* budget = nullptr);

// Lex basis computed as grevlex Buchberger followed by FGLM conversion when
// the ideal is zero-dimensional, falling back to a direct lex Buchberger run
// otherwise.  Both paths produce the same reduced basis.
GroebnerBasis lex_basis(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                        const MonomialOrder& lex_order, Budget* budget = nullptr);

// Basis conversion for zero-dimensional ideals (FGLM).  `src` must be a
// Groebner basis; `lex_order` must be lexicographic over the same context.
GroebnerBasis fglm_to_lex(const GroebnerBasis& src, const MonomialOrder& lex_order,
                          Budget* budget = nullptr, std::size_t dim_cap = 100000);

// Adds an auxiliary variable w and the generator w*(product of factors) - 1,
// so the returned ideal cuts out exactly the points where every factor is
// nonzero (Rabinowitsch).
struct Saturation {
  VarCtxPtr ctx;
  std::vector<MultiPoly> gens;
  std::size_t aux_index = 0;
};
Saturation saturate_nonzero(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                            const std::vector<MultiPoly>& nonzero_factors,
                            const std::string& aux_name = "z");

// Reduced grevlex basis, over the original context, of the ideal saturated by
// the given factors.  Runs Buchberger once in the extended ring under the
// product order that isolates the inverse variable; mixing that variable into
// plain grevlex degrees makes the same computation blow up.
GroebnerBasis saturated_basis(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                              const std::vector<MultiPoly>& nonzero_factors,
                              Budget* budget = nullptr, const std::string& aux_name = "z");

// The basis element involving only `var`, as a univariate polynomial
// (primitive, positive leading coefficient).  Throws NotZeroDimensional if
// the basis has no such element.
UniPoly eliminant(const GroebnerBasis& gb, std::size_t var);

// Monomials outside the leading-term ideal (a vector-space basis of the
// quotient ring).  Throws NotZeroDimensional if infinite, BudgetExceeded if
// larger than cap.
std::vector<Monomial> quotient_staircase(const GroebnerBasis& gb, std::size_t cap = 1u << 20);

// Test helpers: S-polynomial reduction and reducedness checks.
bool is_groebner_basis(const GroebnerBasis& gb, Budget* budget = nullptr);
bool is_reduced_basis(const GroebnerBasis& gb);

}  // namespace einsp
