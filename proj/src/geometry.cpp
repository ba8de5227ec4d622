#include "einsp/geometry.hpp"

#include <algorithm>

#include "einsp/errors.hpp"

namespace einsp {

namespace {

TripleKey key(int i, int j, int k) {
  TripleKey t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

const WallachSpec* as_wallach(const FibrationSpec& s) { return std::get_if<WallachSpec>(&s); }
const FlagSpec* as_flag(const FibrationSpec& s) { return std::get_if<FlagSpec>(&s); }

}  // namespace

void validate_spec(const FibrationSpec& spec) {
  if (auto* w = as_wallach(spec)) {
    if (w->k1 < 1 || w->k2 < 1 || w->k3 < 1)
      throw SpecError("wallach spec needs k1, k2, k3 >= 1");
  } else {
    auto* f = as_flag(spec);
    if (f->p < 2) throw SpecError("flag spec needs p >= 2 (su(p) summand vanishes below that)");
    if (f->p >= f->n) throw SpecError("flag spec needs p < n");
  }
}

std::string spec_name(const FibrationSpec& spec) {
  if (auto* w = as_wallach(spec)) {
    return "wallach(" + std::to_string(w->k1) + "," + std::to_string(w->k2) + "," +
           std::to_string(w->k3) + ")";
  }
  auto* f = as_flag(spec);
  return "flag(" + std::to_string(f->n) + "," + std::to_string(f->p) + ")";
}

std::vector<std::string> summand_labels(const FibrationSpec& spec) {
  if (as_wallach(spec)) return {"x1", "x2", "x12", "x13", "x23"};
  return {"u0", "u1", "u2", "u3"};
}

std::vector<long> summand_dims(const FibrationSpec& spec) {
  validate_spec(spec);
  if (auto* w = as_wallach(spec)) {
    auto sp = [](long k) { return k * (2 * k + 1); };
    return {sp(w->k1), sp(w->k2), 4 * w->k1 * w->k2, 4 * w->k1 * w->k3, 4 * w->k2 * w->k3};
  }
  auto* f = as_flag(spec);
  return {1, f->p * f->p - 1, 4 * f->p * (f->n - f->p), f->p * (f->p + 1)};
}

std::map<TripleKey, BigRational> structure_constants(const FibrationSpec& spec) {
  validate_spec(spec);
  std::map<TripleKey, BigRational> A;
  if (auto* w = as_wallach(spec)) {
    const BigRational np1(w->n() + 1);
    const long k1 = w->k1, k2 = w->k2, k3 = w->k3;
    // summand indices: x1=0, x2=1, x12=2, x13=3, x23=4
    A[key(0, 0, 0)] = BigRational(k1 * (k1 + 1) * (2 * k1 + 1)) / np1;
    A[key(1, 1, 1)] = BigRational(k2 * (k2 + 1) * (2 * k2 + 1)) / np1;
    A[key(2, 2, 0)] = BigRational(k1 * k2 * (2 * k1 + 1)) / np1;
    A[key(3, 3, 0)] = BigRational(k1 * k3 * (2 * k1 + 1)) / np1;
    A[key(2, 2, 1)] = BigRational(k2 * k1 * (2 * k2 + 1)) / np1;
    A[key(4, 4, 1)] = BigRational(k2 * k3 * (2 * k2 + 1)) / np1;
    A[key(2, 4, 3)] = BigRational(2 * k1 * k2 * k3) / np1;
    return A;
  }
  auto dims = summand_dims(spec);
  const BigRational d1(dims[1]), d2(dims[2]), d3(dims[3]);
  const BigRational D = d2 + BigRational(4) * d3;
  // summand indices: u0=0, u1=1, u2=2, u3=3
  A[key(2, 2, 0)] = d2 / D;
  A[key(3, 3, 0)] = BigRational(4) * d3 / D;
  A[key(1, 1, 1)] = BigRational(2) * d3 * (BigRational(2) * d1 + BigRational(2) - d3) / D;
  A[key(1, 2, 2)] = d1 * d2 / D;
  A[key(1, 3, 3)] = BigRational(2) * d3 * (d3 - BigRational(2)) / D;
  A[key(3, 2, 2)] = d2 * d3 / D;
  return A;
}

BigRational triple_value(const std::map<TripleKey, BigRational>& A, int i, int j, int k) {
  auto it = A.find(key(i, j, k));
  return it == A.end() ? BigRational(0) : it->second;
}

std::vector<BigRational> ricci_general(const std::vector<long>& dims,
                                       const std::map<TripleKey, BigRational>& A,
                                       const std::vector<BigRational>& x) {
  const int s = static_cast<int>(dims.size());
  if (x.size() != dims.size()) throw DomainError("metric point arity mismatch");
  for (const auto& xi : x)
    if (xi.sign() <= 0) throw DomainError("metric coordinates must be positive");
  std::vector<BigRational> r(s);
  for (int k = 0; k < s; ++k) {
    const BigRational dk(dims[k]);
    BigRational acc = BigRational(1) / (BigRational(2) * x[k]);
    BigRational s1(0), s2(0);
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < s; ++i) {
        const BigRational a = triple_value(A, j, i, k);
        if (a.is_zero()) continue;
        s1 += a * x[k] / (x[j] * x[i]);
        s2 += a * x[j] / (x[k] * x[i]);
      }
    acc += s1 / (BigRational(4) * dk);
    acc -= s2 / (BigRational(2) * dk);
    r[k] = acc;
  }
  return r;
}

std::vector<BigRational> ricci_general(const FibrationSpec& spec,
                                       const std::vector<BigRational>& x) {
  return ricci_general(summand_dims(spec), structure_constants(spec), x);
}

namespace {

ExprPtr C(const BigRational& v) { return RationalExpr::constant(v); }
ExprPtr C(long a, long b) { return RationalExpr::constant(BigRational(a, b)); }
ExprPtr V(const char* n) { return RationalExpr::var(n); }

std::vector<ExprPtr> wallach_closed(const WallachSpec& w) {
  const long n = w.n(), k1 = w.k1, k2 = w.k2, k3 = w.k3;
  const long K = 4 * (n + 1);
  ExprPtr x1 = V("x1"), x2 = V("x2"), x12 = V("x12"), x13 = V("x13"), x23 = V("x23");
  auto sq = [](const ExprPtr& e) { return RationalExpr::pow(e, 2); };

  ExprPtr r1 = C(k1 + 1, K) / x1 + C(k2, K) * x1 / sq(x12) + C(k3, K) * x1 / sq(x13);
  ExprPtr r2 = C(k2 + 1, K) / x2 + C(k1, K) * x2 / sq(x12) + C(k3, K) * x2 / sq(x23);
  ExprPtr r12 = C(1, 2) / x12 +
                C(k3, K) * (x12 / (x13 * x23) - x13 / (x12 * x23) - x23 / (x12 * x13)) -
                C(2 * k1 + 1, 2 * K) * x1 / sq(x12) - C(2 * k2 + 1, 2 * K) * x2 / sq(x12);
  ExprPtr r13 = C(1, 2) / x13 +
                C(k2, K) * (x13 / (x12 * x23) - x12 / (x13 * x23) - x23 / (x12 * x13)) -
                C(2 * k1 + 1, 2 * K) * x1 / sq(x13);
  ExprPtr r23 = C(1, 2) / x23 +
                C(k1, K) * (x23 / (x13 * x12) - x13 / (x12 * x23) - x12 / (x23 * x13)) -
                C(2 * k2 + 1, 2 * K) * x2 / sq(x23);
  return {r1, r2, r12, r13, r23};
}

// Flag components written over arbitrary expressions for n and p, so the
// same construction serves both the numeric and the symbolic form.
std::vector<ExprPtr> flag_closed(const ExprPtr& n, const ExprPtr& p) {
  ExprPtr u0 = V("u0"), u1 = V("u1"), u2 = V("u2"), u3 = V("u3");
  ExprPtr one = C(1, 1), two = C(2, 1), four = C(4, 1), eight = C(8, 1);
  ExprPtr np1 = n + one;
  auto sq = [](const ExprPtr& e) { return RationalExpr::pow(e, 2); };

  ExprPtr r0 = (n - p) / (four * np1) * u0 / sq(u2) + (p + one) / (four * np1) * u0 / sq(u3);
  ExprPtr r1 = p / (eight * np1 * u1) + (n - p) / np1 * u1 / (four * sq(u2)) +
               (p + two) / (eight * np1) * u1 / sq(u3);
  ExprPtr r2 = one / (two * u2) - (p + one) / (eight * np1) * u3 / sq(u2) -
               (u0 + (sq(p) - one) * u1) / (eight * p * np1 * sq(u2));
  ExprPtr r3 = (p + one) / (two * np1 * u3) + (n - p) / (four * np1) * u3 / sq(u2) -
               (u0 + u1 * (p - one) * (p + two) / two) / (two * p * np1 * sq(u3));
  return {r0, r1, r2, r3};
}

}  // namespace

std::vector<ExprPtr> ricci_closed_form(const FibrationSpec& spec) {
  validate_spec(spec);
  if (auto* w = as_wallach(spec)) return wallach_closed(*w);
  auto* f = as_flag(spec);
  return flag_closed(C(BigRational(f->n)), C(BigRational(f->p)));
}

std::vector<ExprPtr> flag_ricci_symbolic() { return flag_closed(V("n"), V("p")); }

std::vector<BigRational> ricci_closed_at(const FibrationSpec& spec,
                                         const std::vector<BigRational>& x) {
  auto labels = summand_labels(spec);
  if (x.size() != labels.size()) throw DomainError("metric point arity mismatch");
  for (const auto& xi : x)
    if (xi.sign() <= 0) throw DomainError("metric coordinates must be positive");
  std::map<std::string, BigRational> pt;
  for (std::size_t i = 0; i < labels.size(); ++i) pt[labels[i]] = x[i];
  std::vector<BigRational> out;
  for (const auto& comp : ricci_closed_form(spec)) out.push_back(comp->eval(pt));
  return out;
}

}  // namespace einsp
