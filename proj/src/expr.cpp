#include "einsp/expr.hpp"

#include <utility>

namespace einsp {

ExprPtr RationalExpr::constant(BigRational v) {
  auto e = std::shared_ptr<RationalExpr>(new RationalExpr());
  e->kind_ = Kind::Const;
  e->value_ = std::move(v);
  return e;
}

ExprPtr RationalExpr::var(std::string name) {
  auto e = std::shared_ptr<RationalExpr>(new RationalExpr());
  e->kind_ = Kind::Var;
  e->name_ = std::move(name);
  return e;
}

ExprPtr RationalExpr::add(Ptr a, Ptr b) {
  auto e = std::shared_ptr<RationalExpr>(new RationalExpr());
  e->kind_ = Kind::Add;
  e->a_ = std::move(a);
  e->b_ = std::move(b);
  return e;
}

ExprPtr RationalExpr::sub(Ptr a, Ptr b) {
  auto e = std::shared_ptr<RationalExpr>(new RationalExpr());
  e->kind_ = Kind::Sub;
  e->a_ = std::move(a);
  e->b_ = std::move(b);
  return e;
}

ExprPtr RationalExpr::mul(Ptr a, Ptr b) {
  auto e = std::shared_ptr<RationalExpr>(new RationalExpr());
  e->kind_ = Kind::Mul;
  e->a_ = std::move(a);
  e->b_ = std::move(b);
  return e;
}

ExprPtr RationalExpr::div(Ptr a, Ptr b) {
  auto e = std::shared_ptr<RationalExpr>(new RationalExpr());
  e->kind_ = Kind::Div;
  e->a_ = std::move(a);
  e->b_ = std::move(b);
  return e;
}

ExprPtr RationalExpr::pow(Ptr a, long e) {
  if (e < 0) return div(integer(1), pow(std::move(a), -e));
  auto n = std::shared_ptr<RationalExpr>(new RationalExpr());
  n->kind_ = Kind::Pow;
  n->a_ = std::move(a);
  n->exp_ = e;
  return n;
}

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return RationalExpr::add(a, b); }
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) { return RationalExpr::sub(a, b); }
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return RationalExpr::mul(a, b); }
ExprPtr operator/(const ExprPtr& a, const ExprPtr& b) { return RationalExpr::div(a, b); }

BigRational RationalExpr::eval(const std::map<std::string, BigRational>& point) const {
  switch (kind_) {
    case Kind::Const: return value_;
    case Kind::Var: {
      auto it = point.find(name_);
      if (it == point.end()) throw EvalError("no value for variable '" + name_ + "'");
      return it->second;
    }
    case Kind::Add: return a_->eval(point) + b_->eval(point);
    case Kind::Sub: return a_->eval(point) - b_->eval(point);
    case Kind::Mul: return a_->eval(point) * b_->eval(point);
    case Kind::Div: {
      const BigRational d = b_->eval(point);
      if (d.is_zero()) throw EvalError("division by zero while evaluating expression");
      return a_->eval(point) / d;
    }
    case Kind::Pow: return BigRational::pow(a_->eval(point), exp_);
  }
  throw EvalError("corrupt expression node");
}

RatInterval RationalExpr::eval(const std::map<std::string, RatInterval>& box) const {
  switch (kind_) {
    case Kind::Const: return RatInterval::point(value_);
    case Kind::Var: {
      auto it = box.find(name_);
      if (it == box.end()) throw EvalError("no interval for variable '" + name_ + "'");
      return it->second;
    }
    case Kind::Add: return iv_add(a_->eval(box), b_->eval(box));
    case Kind::Sub: return iv_sub(a_->eval(box), b_->eval(box));
    case Kind::Mul: return iv_mul(a_->eval(box), b_->eval(box));
    case Kind::Div: return iv_div(a_->eval(box), b_->eval(box));
    case Kind::Pow: return iv_pow(a_->eval(box), static_cast<unsigned long>(exp_));
  }
  throw EvalError("corrupt expression node");
}

ExprPtr RationalExpr::substitute(const std::string& var, const Ptr& replacement) const {
  switch (kind_) {
    case Kind::Const: return constant(value_);
    case Kind::Var: return name_ == var ? replacement : RationalExpr::var(name_);
    case Kind::Add: return add(a_->substitute(var, replacement), b_->substitute(var, replacement));
    case Kind::Sub: return sub(a_->substitute(var, replacement), b_->substitute(var, replacement));
    case Kind::Mul: return mul(a_->substitute(var, replacement), b_->substitute(var, replacement));
    case Kind::Div: return div(a_->substitute(var, replacement), b_->substitute(var, replacement));
    case Kind::Pow: return pow(a_->substitute(var, replacement), exp_);
  }
  throw EvalError("corrupt expression node");
}

std::string RationalExpr::str() const {
  switch (kind_) {
    case Kind::Const: return value_.str();
    case Kind::Var: return name_;
    case Kind::Add: return "(" + a_->str() + " + " + b_->str() + ")";
    case Kind::Sub: return "(" + a_->str() + " - " + b_->str() + ")";
    case Kind::Mul: return "(" + a_->str() + "*" + b_->str() + ")";
    case Kind::Div: return "(" + a_->str() + "/" + b_->str() + ")";
    case Kind::Pow: return "(" + a_->str() + "^" + std::to_string(exp_) + ")";
  }
  return "?";
}

namespace {

struct PolyLess {
  bool operator()(const MultiPoly& a, const MultiPoly& b) const { return poly_cmp(a, b) < 0; }
};

using FactorMap = std::map<MultiPoly, int, PolyLess>;

// numerator / (product of factor^exp); factors are non-constant polynomials
// with all-positive coefficients
struct Frac {
  MultiPoly num;
  FactorMap den;
};

MultiPoly expand(const VarCtxPtr& ctx, const FactorMap& den) {
  MultiPoly acc = MultiPoly::constant(ctx, BigRational(1));
  for (const auto& [f, e] : den) acc = acc * f.pow(static_cast<unsigned long>(e));
  return acc;
}

MultiPoly expand_quotient(const VarCtxPtr& ctx, const FactorMap& full, const FactorMap& part) {
  MultiPoly acc = MultiPoly::constant(ctx, BigRational(1));
  for (const auto& [f, e] : full) {
    auto it = part.find(f);
    const int rem = e - (it == part.end() ? 0 : it->second);
    if (rem < 0) throw Error("denominator bookkeeping underflow");
    if (rem > 0) acc = acc * f.pow(static_cast<unsigned long>(rem));
  }
  return acc;
}

int coeff_sign_pattern(const MultiPoly& p) {
  // +1 all positive, -1 all negative, 0 mixed
  int s = 0;
  for (const auto& t : p.terms()) {
    const int cs = t.c.sign();
    if (s == 0)
      s = cs;
    else if (cs != s)
      return 0;
  }
  return s;
}

// Splits a polynomial into scalar * var powers * positive atoms for use as a
// denominator factor set.
void absorb_factor(const VarCtxPtr& ctx, const MultiPoly& f, int mult, BigRational* scalar,
                   FactorMap* den) {
  if (f.is_zero()) throw DivByZero("division by the zero polynomial");
  if (f.is_constant()) {
    *scalar *= BigRational::pow(f.constant_value(), mult);
    return;
  }
  if (f.term_count() == 1) {
    const Term& t = f.terms()[0];
    *scalar *= BigRational::pow(t.c, mult);
    for (std::size_t i = 0; i < ctx->arity(); ++i)
      if (t.m.exps[i]) (*den)[MultiPoly::variable(ctx, i)] += mult * t.m.exps[i];
    return;
  }
  const BigRational content = f.content();
  MultiPoly prim = f.scaled(content.inverse());
  *scalar *= BigRational::pow(content, mult);
  const int sp = coeff_sign_pattern(prim);
  if (sp == 0)
    throw UnsupportedDenominator("denominator factor with mixed coefficient signs: " + f.str());
  if (sp < 0) {
    prim = -prim;
    if (mult % 2 != 0) *scalar = -*scalar;
  }
  (*den)[prim] += mult;
}

Frac clear(const ExprPtr& e, const VarCtxPtr& ctx);

Frac combine_linear(const Frac& a, const Frac& b, bool subtract, const VarCtxPtr& ctx) {
  Frac r;
  r.den = a.den;
  for (const auto& [f, e] : b.den) {
    int& cur = r.den[f];
    cur = std::max(cur, e);
  }
  const MultiPoly ca = expand_quotient(ctx, r.den, a.den);
  const MultiPoly cb = expand_quotient(ctx, r.den, b.den);
  r.num = subtract ? a.num * ca - b.num * cb : a.num * ca + b.num * cb;
  return r;
}

Frac clear(const ExprPtr& e, const VarCtxPtr& ctx) {
  switch (e->kind()) {
    case RationalExpr::Kind::Const:
      return {MultiPoly::constant(ctx, e->value()), {}};
    case RationalExpr::Kind::Var:
      return {MultiPoly::variable(ctx, ctx->index_of(e->name())), {}};
    case RationalExpr::Kind::Add:
      return combine_linear(clear(e->lhs(), ctx), clear(e->rhs(), ctx), false, ctx);
    case RationalExpr::Kind::Sub:
      return combine_linear(clear(e->lhs(), ctx), clear(e->rhs(), ctx), true, ctx);
    case RationalExpr::Kind::Mul: {
      Frac a = clear(e->lhs(), ctx), b = clear(e->rhs(), ctx);
      Frac r;
      r.num = a.num * b.num;
      r.den = std::move(a.den);
      for (const auto& [f, ex] : b.den) r.den[f] += ex;
      return r;
    }
    case RationalExpr::Kind::Div: {
      Frac a = clear(e->lhs(), ctx), b = clear(e->rhs(), ctx);
      Frac r;
      r.num = a.num * expand(ctx, b.den);
      r.den = std::move(a.den);
      BigRational scalar(1);
      absorb_factor(ctx, b.num, 1, &scalar, &r.den);
      r.num = r.num.scaled(scalar.inverse());
      return r;
    }
    case RationalExpr::Kind::Pow: {
      Frac a = clear(e->lhs(), ctx);
      Frac r;
      r.num = a.num.pow(static_cast<unsigned long>(e->exponent()));
      for (const auto& [f, ex] : a.den) r.den[f] = ex * static_cast<int>(e->exponent());
      return r;
    }
  }
  throw EvalError("corrupt expression node");
}

}  // namespace

ClearedFraction clear_denominators(const ExprPtr& e, const VarCtxPtr& ctx) {
  Frac f = clear(e, ctx);
  return {std::move(f.num), expand(ctx, f.den)};
}

MultiPoly expr_to_poly_canonical(const ExprPtr& e, const VarCtxPtr& ctx) {
  const ClearedFraction f = clear_denominators(e, ctx);
  if (f.num.is_zero()) return f.num;
  return f.num.canonical();
}

}  // namespace einsp
