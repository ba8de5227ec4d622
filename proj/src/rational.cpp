#include "einsp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace einsp {

BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt int_lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRational::BigRational(long num, long den) {
  if (den == 0) throw DivByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

// "123", "-4/9", "0.25", "1e-12", "2.5e3"
mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational literal");

  auto epos = s.find_first_of("eE");
  long exp10 = 0;
  if (epos != std::string::npos) {
    const std::string tail = s.substr(epos + 1);
    if (tail.empty()) throw ParseError("bad exponent in '" + text + "'");
    exp10 = std::strtol(tail.c_str(), nullptr, 10);
    s = s.substr(0, epos);
  }

  mpq_class q;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    exp10 -= static_cast<long>(s.size() - dot - 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("bad rational literal '" + text + "'");
    if (mpz_class n; n.set_str(digits, 10) == 0)
      q = mpq_class(n);
    else
      throw ParseError("bad rational literal '" + text + "'");
  } else {
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw DivByZero("rational with zero denominator");
  }
  if (exp10 > 0) {
    q *= mpq_class(int_pow(10, static_cast<unsigned long>(exp10)));
  } else if (exp10 < 0) {
    q /= mpq_class(int_pow(10, static_cast<unsigned long>(-exp10)));
  }
  q.canonicalize();
  return q;
}

}  // namespace

BigRational::BigRational(const std::string& text) { q_ = parse_rational(text); }

BigRational BigRational::abs() const {
  BigRational r = *this;
  if (r.sign() < 0) r.q_ = -r.q_;
  return r;
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw DivByZero("inverse of zero");
  BigRational r;
  r.q_ = 1 / q_;
  return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivByZero("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.q_ = -q_;
  return r;
}

BigRational BigRational::pow(const BigRational& base, long e) {
  if (e == 0) return BigRational(1);
  if (e < 0) return pow(base.inverse(), -e);
  BigRational r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), base.q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.q_.get_den_mpz_t(), base.q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;  // powers of a canonical fraction stay canonical
}

std::string BigRational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  const BigInt scale = int_pow(10, static_cast<unsigned long>(digits));
  BigInt n = num() * scale;
  const BigInt d = den();
  const bool neg = sgn(n) < 0;
  if (neg) n = -n;

  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r >= d) q += 1;  // half away from zero

  std::string body = q.get_str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (static_cast<int>(body.size()) <= digits)
      body.insert(0, static_cast<size_t>(digits + 1) - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  if (neg && q != 0) out.insert(0, 1, '-');
  return out;
}

void Budget::check_clock(const char* where) const {
  if (max_seconds_ <= 0.0) return;
  if (seconds_used() > max_seconds_)
    throw BudgetExceeded(std::string("time limit exceeded in ") + where);
}

double Budget::seconds_used() const {
  return std::chrono::duration<double>(Clock::now() - start_).count();
}

Budget Budget::from_env_or(double seconds, std::uint64_t max_steps) {
  if (const char* env = std::getenv("EINSTEIN_SP_BUDGET_SECONDS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) seconds = v;
  }
  return Budget(seconds, max_steps);
}

}  // namespace einsp
