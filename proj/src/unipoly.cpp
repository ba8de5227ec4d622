#include "einsp/unipoly.hpp"

#include <algorithm>

namespace einsp {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(BigRational c) {
  UniPoly p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::x() { return UniPoly({BigRational(0), BigRational(1)}); }

UniPoly UniPoly::from_multi(const MultiPoly& p, std::size_t var) {
  std::vector<BigRational> coeffs;
  for (const auto& t : p.terms()) {
    if (t.m.deg != t.m.exps[var])
      throw ContextError("polynomial is not univariate in the requested variable");
    const std::size_t e = t.m.exps[var];
    if (coeffs.size() <= e) coeffs.resize(e + 1, BigRational(0));
    coeffs[e] += t.c;
  }
  return UniPoly(std::move(coeffs));
}

const BigRational& UniPoly::coeff(std::size_t i) const {
  static const BigRational zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const BigRational& UniPoly::leading_coeff() const {
  if (is_zero()) throw ZeroPolyError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigRational UniPoly::eval(const BigRational& x) const {
  BigRational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RatInterval UniPoly::eval(const RatInterval& x) const {
  RatInterval acc = RatInterval::point(BigRational(0));
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = iv_add(iv_mul(acc, x), RatInterval::point(coeffs_[i]));
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::primitive_sign_preserved() const {
  if (is_zero()) return *this;
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    num_gcd = int_gcd(num_gcd, c.num());
    den_lcm = int_lcm(den_lcm, c.den());
  }
  return scaled(BigRational(num_gcd, den_lcm).inverse());
}

UniPoly UniPoly::canonical() const {
  if (is_zero()) return *this;
  UniPoly p = primitive_sign_preserved();
  if (p.leading_coeff().sign() < 0) p = -p;
  return p;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const BigRational& c) const {
  if (c.is_zero()) return UniPoly();
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

UniPoly UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& rem) {
  if (b.is_zero()) throw DivByZero("polynomial division by zero");
  UniPoly q;
  rem = a;
  if (a.degree() < b.degree()) return q;
  q.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const BigRational f = rem.leading_coeff() / b.leading_coeff();
    q.coeffs_[shift] += f;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= f * b.coeffs_[i];
    rem.trim();
  }
  q.trim();
  return q;
}

UniPoly UniPoly::exact_divide(const UniPoly& d) const {
  UniPoly rem;
  UniPoly q = divmod(*this, d, rem);
  if (!rem.is_zero()) throw RemainderError("polynomial division left a remainder");
  return q;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a.canonical(), g = b.canonical();
  while (!g.is_zero()) {
    UniPoly rem;
    divmod(f, g, rem);
    f = std::move(g);
    g = rem.canonical();
  }
  return f.canonical();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) throw ZeroPolyError("squarefree part of zero polynomial");
  if (degree() == 0) return UniPoly::constant(BigRational(1));
  const UniPoly g = gcd(*this, derivative());
  return exact_divide(g).canonical();
}

MultiPoly UniPoly::to_multi(const VarCtxPtr& ctx, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    terms.push_back({coeffs_[i], Monomial::var(ctx->arity(), var, static_cast<std::uint16_t>(i))});
  }
  return MultiPoly::from_terms(ctx, std::move(terms));
}

std::string UniPoly::str(const std::string& var) const {
  auto ctx = VarContext::make({var});
  return to_multi(ctx, 0).str();
}

SturmChain sturm_chain(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolyError("Sturm chain of zero polynomial");
  SturmChain chain;
  chain.seq.push_back(f.primitive_sign_preserved());
  if (f.degree() == 0) return chain;
  chain.seq.push_back(f.derivative().primitive_sign_preserved());
  while (chain.seq.back().degree() > 0) {
    UniPoly rem;
    UniPoly::divmod(chain.seq[chain.seq.size() - 2], chain.seq.back(), rem);
    if (rem.is_zero()) break;
    chain.seq.push_back((-rem).primitive_sign_preserved());
  }
  return chain;
}

int sturm_variations(const SturmChain& chain, const BigRational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain.seq) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int sturm_count(const SturmChain& chain, const BigRational& lo, const BigRational& hi) {
  if (hi <= lo) throw InvalidInterval("sturm_count needs lo < hi");
  if (chain.f().sign_at(lo) == 0 || chain.f().sign_at(hi) == 0)
    throw EndpointRoot("sturm_count endpoint is a root");
  return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

BigRational cauchy_root_bound(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolyError("root bound of zero polynomial");
  BigRational m(0);
  const BigRational lead = f.leading_coeff().abs();
  for (int i = 0; i < f.degree(); ++i)
    m = std::max(m, f.coeff(static_cast<std::size_t>(i)).abs() / lead);
  return BigRational(1) + m;
}

namespace {

void budget_step(Budget* b, const char* where) {
  if (b) b->step(where);
}

// First split point of (lo, hi) that is not a root: tries the midpoint, then
// dyadic points marching toward lo.
BigRational split_point(const UniPoly& g, const BigRational& lo, const BigRational& hi,
                        int* root_sign_hint = nullptr) {
  BigRational frac(1, 2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const BigRational cand = lo + (hi - lo) * frac;
    const int s = g.sign_at(cand);
    if (s != 0) {
      if (root_sign_hint) *root_sign_hint = s;
      return cand;
    }
    frac = frac / BigRational(2);
  }
  throw Error("could not find a non-root split point");
}

}  // namespace

IsolatingInterval refine_root(const UniPoly& sqfree, IsolatingInterval iv, const BigRational& width,
                              Budget* budget) {
  if (iv.exact) {
    if (iv.width() > width) iv.lo = *iv.exact - width / BigRational(2);
    return iv;
  }
  int slo = sqfree.sign_at(iv.lo);
  const int shi = sqfree.sign_at(iv.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw InvalidInterval("refine_root needs a sign change over the interval");
  while (iv.width() > width) {
    budget_step(budget, "root refinement");
    const BigRational mid = (iv.lo + iv.hi) / BigRational(2);
    const int sm = sqfree.sign_at(mid);
    if (sm == 0) {
      iv.exact = mid;
      iv.hi = mid;
      if (iv.width() > width) iv.lo = mid - width / BigRational(2);
      return iv;
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
    slo = sqfree.sign_at(iv.lo);
  }
  return iv;
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& f, const IsolationOptions& opt) {
  if (f.is_zero()) throw ZeroPolyError("cannot isolate roots of the zero polynomial");
  UniPoly g = f.squarefree_part();

  // pull out the root at zero so Sturm endpoints are never roots
  bool zero_root = false;
  while (!g.is_zero() && g.coeff(0).is_zero()) {
    zero_root = true;
    std::vector<BigRational> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = UniPoly(std::move(shifted));
  }
  if (g.degree() <= 0) {
    std::vector<IsolatingInterval> out;
    if (zero_root && !opt.positive_only) {
      IsolatingInterval z{-opt.target_width, BigRational(0), BigRational(0)};
      out.push_back(z);
    }
    return out;
  }

  const SturmChain chain = sturm_chain(g);
  const BigRational bound = cauchy_root_bound(g);
  std::vector<IsolatingInterval> out;

  struct Span {
    BigRational lo, hi;
    int count;
  };
  std::vector<Span> work;
  auto push_domain = [&](const BigRational& lo, const BigRational& hi) {
    const int c = sturm_count(chain, lo, hi);
    if (c > 0) work.push_back({lo, hi, c});
  };
  if (opt.positive_only) {
    push_domain(BigRational(0), bound);
  } else {
    push_domain(BigRational(0), bound);
    push_domain(-bound, BigRational(0));
  }

  while (!work.empty()) {
    budget_step(opt.budget, "root isolation");
    Span span = work.back();
    work.pop_back();
    if (span.count == 1) {
      IsolatingInterval iv{span.lo, span.hi, std::nullopt};
      out.push_back(refine_root(g, iv, opt.target_width, opt.budget));
      continue;
    }
    const BigRational mid = split_point(g, span.lo, span.hi);
    const int left = sturm_count(chain, span.lo, mid);
    if (left > 0) work.push_back({span.lo, mid, left});
    if (span.count - left > 0) work.push_back({mid, span.hi, span.count - left});
  }

  if (zero_root && !opt.positive_only) {
    // shrink w until (-w, 0] holds no root of g and no existing interval
    BigRational w = opt.target_width;
    for (;;) {
      budget_step(opt.budget, "root isolation");
      if (g.sign_at(-w) != 0 && sturm_count(chain, -w, BigRational(0)) == 0) {
        bool clash = false;
        for (const auto& iv : out)
          if (!(iv.hi <= -w || iv.lo >= BigRational(0))) clash = true;
        if (!clash) break;
      }
      w = w / BigRational(2);
    }
    out.push_back({-w, BigRational(0), BigRational(0)});
  }

  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace einsp
