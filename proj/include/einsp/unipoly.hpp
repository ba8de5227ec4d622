#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einsp/interval.hpp"
#include "einsp/multipoly.hpp"
#include "einsp/rational.hpp"

namespace einsp {

// Dense univariate polynomial over the rationals; coeffs_[i] is the
// coefficient of x^i, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<BigRational> coeffs);
  static UniPoly constant(BigRational c);
  static UniPoly x();
  // Requires every variable other than `var` to be absent from p.
  static UniPoly from_multi(const MultiPoly& p, std::size_t var);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const BigRational& coeff(std::size_t i) const;
  const BigRational& leading_coeff() const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  BigRational eval(const BigRational& x) const;  // Horner
  int sign_at(const BigRational& x) const { return eval(x).sign(); }
  RatInterval eval(const RatInterval& x) const;

  UniPoly derivative() const;
  UniPoly primitive_sign_preserved() const;
  UniPoly canonical() const;  // primitive, positive leading coefficient

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const BigRational& c) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Euclidean division; returns quotient, stores remainder.
  static UniPoly divmod(const UniPoly& a, const UniPoly& b, UniPoly& rem);
  // Throws RemainderError if the division is not exact.
  UniPoly exact_divide(const UniPoly& d) const;
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);  // canonical
  UniPoly squarefree_part() const;                         // canonical

  MultiPoly to_multi(const VarCtxPtr& ctx, std::size_t var) const;
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

// Sturm chain of f: f, f', then negated remainders, each primitive.
struct SturmChain {
  std::vector<UniPoly> seq;
  const UniPoly& f() const { return seq.front(); }
};

SturmChain sturm_chain(const UniPoly& f);
// Sign variations of the chain evaluated at x (zeros skipped).
int sturm_variations(const SturmChain& chain, const BigRational& x);
// Number of distinct real roots in (lo, hi].  Requires f(lo) != 0 != f(hi),
// otherwise throws EndpointRoot.
int sturm_count(const SturmChain& chain, const BigRational& lo, const BigRational& hi);

// 1 + max|a_i / a_n|; every real root lies strictly inside (-B, B).
BigRational cauchy_root_bound(const UniPoly& f);

// Interval (lo, hi] containing exactly one real root of the polynomial it
// was derived from.  If the root was hit exactly during bisection it is
// reported in `exact` (and hi == *exact).
struct IsolatingInterval {
  BigRational lo, hi;
  std::optional<BigRational> exact;

  RatInterval to_interval() const { return RatInterval(lo, hi); }
  BigRational width() const { return hi - lo; }
};

struct IsolationOptions {
  bool positive_only = false;
  BigRational target_width = BigRational(1, 1000000);
  Budget* budget = nullptr;
};

// Disjoint isolating intervals for the distinct real roots (ascending).
// Works on the squarefree part internally; input may have multiple roots.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& f, const IsolationOptions& opt);

// Shrinks an isolating interval below `width` by bisection.  `sqfree` must be
// squarefree with exactly one root in the interval.
IsolatingInterval refine_root(const UniPoly& sqfree, IsolatingInterval iv,
                              const BigRational& width, Budget* budget = nullptr);

}  // namespace einsp
