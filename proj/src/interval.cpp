#include "einsp/interval.hpp"

#include <algorithm>

namespace einsp {

RatInterval::RatInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw InvalidInterval("interval with hi < lo");
}

int RatInterval::sign() const {
  if (hi.sign() < 0) return -1;
  if (lo.sign() > 0) return 1;
  return 0;
}

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval iv_sub(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval iv_neg(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  const BigRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return RatInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

RatInterval iv_div(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw DivByZero("interval division by interval containing zero");
  const BigRational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  return RatInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

RatInterval iv_pow(const RatInterval& a, unsigned long e) {
  if (e == 0) return RatInterval::point(BigRational(1));
  if (e == 1) return a;
  const BigRational plo = BigRational::pow(a.lo, static_cast<long>(e));
  const BigRational phi = BigRational::pow(a.hi, static_cast<long>(e));
  if (e % 2 == 1) return RatInterval(plo, phi);
  if (a.lo.sign() >= 0) return RatInterval(plo, phi);
  if (a.hi.sign() <= 0) return RatInterval(phi, plo);
  return RatInterval(BigRational(0), std::max(plo, phi));
}

RatInterval iv_hull(const RatInterval& a, const RatInterval& b) {
  return RatInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

RatInterval eval_poly(const MultiPoly& p, const std::vector<RatInterval>& box) {
  if (box.size() != p.context()->arity()) throw EvalError("evaluation box arity mismatch");
  RatInterval acc = RatInterval::point(BigRational(0));
  for (const auto& t : p.terms()) {
    RatInterval v = RatInterval::point(t.c);
    for (std::size_t i = 0; i < box.size(); ++i)
      if (t.m.exps[i]) v = iv_mul(v, iv_pow(box[i], t.m.exps[i]));
    acc = iv_add(acc, v);
  }
  return acc;
}

}  // namespace einsp
