#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einsp/context.hpp"
#include "einsp/rational.hpp"

namespace einsp {

struct Term {
  BigRational c;
  Monomial m;
};

// Sparse multivariate polynomial over the rationals.  Terms are kept sorted
// descending under the canonical order (grevlex, natural precedence), with no
// zero coefficients and no duplicate monomials.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly zero(VarCtxPtr ctx);
  static MultiPoly constant(VarCtxPtr ctx, BigRational c);
  static MultiPoly variable(VarCtxPtr ctx, std::size_t idx);
  static MultiPoly variable(VarCtxPtr ctx, const std::string& name);
  static MultiPoly monomial(VarCtxPtr ctx, BigRational c, Monomial m);
  // Sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(VarCtxPtr ctx, std::vector<Term> terms);

  const VarCtxPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
  // Constant value; requires is_constant().
  BigRational constant_value() const;

  std::uint32_t total_degree() const;              // 0 for the zero polynomial
  std::uint32_t degree_in(std::size_t var) const;  // 0 for the zero polynomial
  bool uses_var(std::size_t var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const BigRational& c) const;
  MultiPoly pow(unsigned long e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  BigRational eval(const std::vector<BigRational>& point) const;
  MultiPoly substitute(std::size_t var, const BigRational& value) const;
  MultiPoly substitute(std::size_t var, const MultiPoly& g) const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  // Throws ZeroPolyError on the zero polynomial.
  BigRational content() const;
  MultiPoly primitive_sign_preserved() const;
  // Primitive with positive leading coefficient under the canonical order.
  MultiPoly canonical() const;

  const Term& leading_term(const MonomialOrder& order) const;  // max under order

  // Re-expresses the polynomial over another context, matching variables by
  // name.  Every variable that actually occurs must exist in the target.
  MultiPoly reindexed(const VarCtxPtr& target) const;

  std::string str() const;  // canonical text form (see polyio)

 private:
  VarCtxPtr ctx_;
  std::vector<Term> terms_;
};

// If b == r*a for a rational r, returns r (a, b nonzero).
std::optional<BigRational> proportionality_ratio(const MultiPoly& a, const MultiPoly& b);
bool proportional_positive(const MultiPoly& a, const MultiPoly& b);

// Deterministic total order on polynomials sharing a context (used for
// factor bookkeeping in denominator clearing).
int poly_cmp(const MultiPoly& a, const MultiPoly& b);

}  // namespace einsp
