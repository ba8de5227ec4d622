#include "einsp/multipoly.hpp"

#include <algorithm>
#include <map>

#include "einsp/polyio.hpp"

namespace einsp {

MultiPoly MultiPoly::zero(VarCtxPtr ctx) {
  MultiPoly p;
  p.ctx_ = std::move(ctx);
  return p;
}

MultiPoly MultiPoly::constant(VarCtxPtr ctx, BigRational c) {
  MultiPoly p = zero(std::move(ctx));
  if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial::one(p.ctx_->arity())});
  return p;
}

MultiPoly MultiPoly::variable(VarCtxPtr ctx, std::size_t idx) {
  MultiPoly p = zero(std::move(ctx));
  p.terms_.push_back({BigRational(1), Monomial::var(p.ctx_->arity(), idx)});
  return p;
}

MultiPoly MultiPoly::variable(VarCtxPtr ctx, const std::string& name) {
  const std::size_t idx = ctx->index_of(name);
  return variable(std::move(ctx), idx);
}

MultiPoly MultiPoly::monomial(VarCtxPtr ctx, BigRational c, Monomial m) {
  MultiPoly p = zero(std::move(ctx));
  if (m.exps.size() != p.ctx_->arity()) throw ContextError("monomial arity mismatch");
  if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

MultiPoly MultiPoly::from_terms(VarCtxPtr ctx, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.m.exps.size() != ctx->arity()) throw ContextError("term arity mismatch");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_mono_cmp(a.m, b.m) > 0; });
  MultiPoly p = zero(std::move(ctx));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m)
      p.terms_.back().c += t.c;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
  }
  return p;
}

BigRational MultiPoly::constant_value() const {
  if (is_zero()) return BigRational(0);
  if (!is_constant()) throw EvalError("polynomial is not constant");
  return terms_[0].c;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.deg);
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.m.exps[var]);
  return d;
}

bool MultiPoly::uses_var(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.m.exps[var]) return true;
  return false;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a.ctx_, b.ctx_, "poly addition");
  MultiPoly r = MultiPoly::zero(a.ctx_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size())
      c = -1;
    else if (j == b.terms_.size())
      c = 1;
    else
      c = canonical_mono_cmp(a.terms_[i].m, b.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      BigRational s = a.terms_[i].c + b.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({std::move(s), a.terms_[i].m});
      ++i, ++j;
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a.ctx_, b.ctx_, "poly multiplication");
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prod.push_back({ta.c * tb.c, mono_mul(ta.m, tb.m)});
  return MultiPoly::from_terms(a.ctx_, std::move(prod));
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (c.is_zero()) return zero(ctx_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly r = constant(ctx_, BigRational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

BigRational MultiPoly::eval(const std::vector<BigRational>& point) const {
  if (point.size() != ctx_->arity()) throw EvalError("evaluation point arity mismatch");
  BigRational acc(0);
  for (const auto& t : terms_) {
    BigRational v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.m.exps[i]) v *= BigRational::pow(point[i], t.m.exps[i]);
    acc += v;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, const BigRational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt = t;
    if (const auto e = t.m.exps[var]; e) {
      nt.c *= BigRational::pow(value, e);
      nt.m.exps[var] = 0;
      nt.m.deg -= e;
    }
    out.push_back(std::move(nt));
  }
  return from_terms(ctx_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& g) const {
  require_same_context(ctx_, g.ctx_, "poly substitution");
  std::vector<MultiPoly> powers = {constant(ctx_, BigRational(1))};
  MultiPoly acc = zero(ctx_);
  for (const auto& t : terms_) {
    const auto e = t.m.exps[var];
    while (powers.size() <= e) powers.push_back(powers.back() * g);
    Monomial rest = t.m;
    rest.deg -= rest.exps[var];
    rest.exps[var] = 0;
    acc = acc + powers[e].scaled(t.c) * monomial(ctx_, BigRational(1), rest);
  }
  return acc;
}

BigRational MultiPoly::content() const {
  if (is_zero()) throw ZeroPolyError("content of zero polynomial");
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    num_gcd = int_gcd(num_gcd, t.c.num());
    den_lcm = int_lcm(den_lcm, t.c.den());
  }
  return BigRational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::primitive_sign_preserved() const {
  if (is_zero()) return *this;
  return scaled(content().inverse());
}

MultiPoly MultiPoly::canonical() const {
  if (is_zero()) return *this;
  MultiPoly p = primitive_sign_preserved();
  if (p.terms_[0].c.sign() < 0) p = -p;
  return p;
}

const Term& MultiPoly::leading_term(const MonomialOrder& order) const {
  if (is_zero()) throw ZeroPolyError("leading term of zero polynomial");
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (order.less(terms_[best].m, terms_[i].m)) best = i;
  return terms_[best];
}

MultiPoly MultiPoly::reindexed(const VarCtxPtr& target) const {
  if (same_context(ctx_, target)) {
    MultiPoly r = *this;
    r.ctx_ = target;
    return r;
  }
  std::vector<std::optional<std::size_t>> map(ctx_->arity());
  for (std::size_t i = 0; i < ctx_->arity(); ++i) map[i] = target->find(ctx_->name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < ctx_->arity(); ++i) {
      if (!t.m.exps[i]) continue;
      if (!map[i])
        throw ContextError("variable '" + ctx_->name(i) + "' missing from target context");
      m.exps[*map[i]] = t.m.exps[i];
    }
    m.deg = t.m.deg;
    out.push_back({t.c, std::move(m)});
  }
  return from_terms(target, std::move(out));
}

std::string MultiPoly::str() const { return poly_to_text(*this); }

std::optional<BigRational> proportionality_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (!same_context(a.context(), b.context())) return std::nullopt;
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.term_count() != b.term_count()) return std::nullopt;
  const BigRational r = b.terms()[0].c / a.terms()[0].c;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (!(a.terms()[i].m == b.terms()[i].m)) return std::nullopt;
    if (a.terms()[i].c * r != b.terms()[i].c) return std::nullopt;
  }
  return r;
}

bool proportional_positive(const MultiPoly& a, const MultiPoly& b) {
  const auto r = proportionality_ratio(a, b);
  return r && r->sign() > 0;
}

int poly_cmp(const MultiPoly& a, const MultiPoly& b) {
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count() ? -1 : 1;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    const int mc = canonical_mono_cmp(a.terms()[i].m, b.terms()[i].m);
    if (mc) return mc;
    const auto &ca = a.terms()[i].c, &cb = b.terms()[i].c;
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

}  // namespace einsp
