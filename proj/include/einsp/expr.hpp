#pragma once

#include <map>
#include <memory>
#include <string>

#include "einsp/interval.hpp"
#include "einsp/multipoly.hpp"
#include "einsp/rational.hpp"

namespace einsp {

// Immutable expression tree over named variables: constants, +, -, *, /,
// and integer powers.  Used to write down curvature formulas exactly as
// printed and to evaluate them over rationals or intervals.
class RationalExpr {
 public:
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Pow };
  using Ptr = std::shared_ptr<const RationalExpr>;

  static Ptr constant(BigRational v);
  static Ptr integer(long v) { return constant(BigRational(v)); }
  static Ptr var(std::string name);
  static Ptr add(Ptr a, Ptr b);
  static Ptr sub(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr div(Ptr a, Ptr b);
  static Ptr pow(Ptr a, long e);  // negative e becomes 1 / a^(-e)

  Kind kind() const { return kind_; }
  const BigRational& value() const { return value_; }
  const std::string& name() const { return name_; }
  const Ptr& lhs() const { return a_; }
  const Ptr& rhs() const { return b_; }
  long exponent() const { return exp_; }

  BigRational eval(const std::map<std::string, BigRational>& point) const;
  RatInterval eval(const std::map<std::string, RatInterval>& box) const;
  Ptr substitute(const std::string& var, const Ptr& replacement) const;

  std::string str() const;

 private:
  RationalExpr() = default;
  Kind kind_ = Kind::Const;
  BigRational value_;
  std::string name_;
  Ptr a_, b_;
  long exp_ = 0;
};

using ExprPtr = RationalExpr::Ptr;

// sum of products helpers for readable formula construction
ExprPtr operator+(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator/(const ExprPtr& a, const ExprPtr& b);

// Numerator and fully expanded denominator of the expression written over a
// least common denominator, with num/den == e exactly.  The denominator is
// positive wherever all variables are positive.
struct ClearedFraction {
  MultiPoly num;
  MultiPoly den;
};

// Clears denominators over `ctx`.  Denominator atoms are tracked in factored
// form so repeated factors share a least common denominator instead of piling
// up, which keeps the numerator free of spurious factors.  Every denominator
// atom must be a constant, a variable, or a polynomial whose coefficients all
// share one sign; anything else throws UnsupportedDenominator.
ClearedFraction clear_denominators(const ExprPtr& e, const VarCtxPtr& ctx);

// Numerator of clear_denominators, normalized canonical (primitive, positive
// leading coefficient under the canonical order).
MultiPoly expr_to_poly_canonical(const ExprPtr& e, const VarCtxPtr& ctx);

}  // namespace einsp
