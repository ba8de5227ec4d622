#include "einsp/context.hpp"

#include <algorithm>

namespace einsp {

VarCtxPtr VarContext::make(std::vector<std::string> names) {
  for (const auto& n : names) {
    if (n.empty()) throw ContextError("empty variable name");
    if (std::count(names.begin(), names.end(), n) != 1)
      throw ContextError("duplicate variable name '" + n + "'");
  }
  return VarCtxPtr(new VarContext(std::move(names)));
}

std::optional<std::size_t> VarContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarContext::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ContextError("unknown variable '" + std::string(name) + "'");
}

VarCtxPtr VarContext::extended(const VarCtxPtr& base, const std::string& extra) {
  auto names = base->names();
  names.push_back(extra);
  return make(std::move(names));
}

bool same_context(const VarCtxPtr& a, const VarCtxPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_names(*b);
}

void require_same_context(const VarCtxPtr& a, const VarCtxPtr& b, const char* where) {
  if (!same_context(a, b))
    throw ContextError(std::string("mixed variable contexts in ") + where);
}

Monomial Monomial::var(std::size_t arity, std::size_t idx, std::uint16_t e) {
  Monomial m(arity);
  m.exps.at(idx) = e;
  m.deg = e;
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  r.deg = a.deg + b.deg;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    if (b.exps[i] > a.exps[i]) throw ContextError("monomial division with remainder");
    r.exps[i] = static_cast<std::uint16_t>(a.exps[i] - b.exps[i]);
  }
  r.deg = a.deg - b.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    r.exps[i] = std::max(a.exps[i], b.exps[i]);
    r.deg += r.exps[i];
  }
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

MonomialOrder MonomialOrder::lex(const VarCtxPtr& ctx, const std::vector<std::string>& names) {
  if (names.size() != ctx->arity())
    throw ContextError("lex precedence must list every variable exactly once");
  MonomialOrder o;
  o.kind = Kind::Lex;
  for (const auto& n : names) o.precedence.push_back(static_cast<std::uint32_t>(ctx->index_of(n)));
  std::vector<std::uint32_t> check = o.precedence;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw ContextError("lex precedence must list every variable exactly once");
  return o;
}

static std::vector<std::uint32_t> natural(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

MonomialOrder MonomialOrder::lex_natural(const VarCtxPtr& ctx) {
  MonomialOrder o;
  o.kind = Kind::Lex;
  o.precedence = natural(ctx->arity());
  return o;
}

MonomialOrder MonomialOrder::grevlex_natural(const VarCtxPtr& ctx) {
  MonomialOrder o;
  o.kind = Kind::GrevLex;
  o.precedence = natural(ctx->arity());
  return o;
}

MonomialOrder MonomialOrder::elim_first(const VarCtxPtr& ctx, const std::string& name) {
  MonomialOrder o;
  o.kind = Kind::ElimFirst;
  const std::uint32_t lead = static_cast<std::uint32_t>(ctx->index_of(name));
  o.precedence.push_back(lead);
  for (std::uint32_t v = 0; v < ctx->arity(); ++v)
    if (v != lead) o.precedence.push_back(v);
  return o;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::Lex) {
    for (std::uint32_t v : precedence) {
      if (a.exps[v] != b.exps[v]) return a.exps[v] > b.exps[v] ? 1 : -1;
    }
    return 0;
  }
  std::size_t tail_start = 0;
  std::uint32_t da = a.deg, db = b.deg;
  if (kind == Kind::ElimFirst) {
    const std::uint32_t lead = precedence[0];
    if (a.exps[lead] != b.exps[lead]) return a.exps[lead] > b.exps[lead] ? 1 : -1;
    tail_start = 1;
    da -= a.exps[lead], db -= b.exps[lead];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = precedence.size(); i-- > tail_start;) {
    const std::uint32_t v = precedence[i];
    if (a.exps[v] != b.exps[v]) return a.exps[v] < b.exps[v] ? 1 : -1;
  }
  return 0;
}

int canonical_mono_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace einsp
