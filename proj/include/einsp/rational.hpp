#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "einsp/errors.hpp"

namespace einsp {

using BigInt = mpz_class;

BigInt int_gcd(const BigInt& a, const BigInt& b);
BigInt int_lcm(const BigInt& a, const BigInt& b);
BigInt int_pow(const BigInt& base, unsigned long e);

// Arbitrary-precision rational with value semantics.  Always stored in
// canonical form (coprime numerator/denominator, positive denominator).
class BigRational {
 public:
  BigRational() : q_(0) {}
  BigRational(long n) : q_(n) {}  // NOLINT: implicit by design
  BigRational(const BigInt& n) : q_(n) {}
  BigRational(long num, long den);
  BigRational(const BigInt& num, const BigInt& den);
  // Accepts "p", "p/q", and decimal strings like "1e-12" or "0.25".
  explicit BigRational(const std::string& text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational abs() const;
  BigRational inverse() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

  static BigRational pow(const BigRational& base, long e);

  // "p" or "p/q"
  std::string str() const;
  // Fixed-point decimal with the given number of fractional digits,
  // rounded half away from zero.  Deterministic.
  std::string decimal(int digits) const;
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

inline BigRational rat(long num, long den = 1) { return BigRational(num, den); }

}  // namespace einsp
