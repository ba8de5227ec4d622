#pragma once

#include <vector>

#include "einsp/multipoly.hpp"
#include "einsp/rational.hpp"

namespace einsp {

// Closed rational interval [lo, hi] with exact endpoint arithmetic.
struct RatInterval {
  BigRational lo, hi;

  RatInterval() = default;
  RatInterval(BigRational l, BigRational h);
  static RatInterval point(const BigRational& v) { return RatInterval(v, v); }

  BigRational width() const { return hi - lo; }
  BigRational mid() const { return (lo + hi) / BigRational(2); }
  bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool is_point() const { return lo == hi; }
  // -1 if hi < 0, +1 if lo > 0, 0 otherwise
  int sign() const;
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_neg(const RatInterval& a);
// Throws DivByZero if b contains zero.
RatInterval iv_div(const RatInterval& a, const RatInterval& b);
RatInterval iv_pow(const RatInterval& a, unsigned long e);
RatInterval iv_hull(const RatInterval& a, const RatInterval& b);

// Interval extension of polynomial evaluation (one box entry per variable).
RatInterval eval_poly(const MultiPoly& p, const std::vector<RatInterval>& box);

}  // namespace einsp
