#include "einsp/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

namespace einsp {

namespace {

void budget_step(Budget* b, const char* where) {
  if (b) b->step(where);
}

// Diagnostic trace on stderr, enabled by setting EINSP_GB_TRACE.  Never
// touches stdout, so command output stays deterministic.
bool trace_enabled() {
  static const bool on = std::getenv("EINSP_GB_TRACE") != nullptr;
  return on;
}


// Engine-internal polynomial over the integers, terms sorted descending under
// the run order.  Working over Z with pseudo-reduction avoids the per-term
// gcd normalization that rational arithmetic pays on every operation; a
// tracked scale factor recovers the exact rational result when one is needed.
// The sugar field carries the phantom homogenization degree used to select
// pairs (inhomogeneous inputs reduce far fewer useless pairs this way).
struct ZTerm {
  BigInt c;
  Monomial m;
};

struct ZPoly {
  std::vector<ZTerm> t;
  std::uint32_t sugar = 0;
  bool is_zero() const { return t.empty(); }
  const ZTerm& lt() const { return t.front(); }
};

bool same_terms(const ZPoly& a, const ZPoly& b) {
  if (a.t.size() != b.t.size()) return false;
  for (std::size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].c != b.t[i].c || !(a.t[i].m == b.t[i].m)) return false;
  return true;
}

struct Engine {
  VarCtxPtr ctx;
  MonomialOrder order;
  Budget* budget;

  // Integer image of p, primitive with positive leading coefficient.  When
  // factor is given it receives mu such that p == mu * result.
  ZPoly convert(const MultiPoly& p, BigRational* factor = nullptr) const {
    std::vector<Term> terms = p.terms();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.cmp(a.m, b.m) > 0; });
    BigInt den(1);
    for (const auto& t : terms) den = int_lcm(den, t.c.den());
    ZPoly z;
    z.t.reserve(terms.size());
    BigInt content(0);
    for (auto& t : terms) {
      BigInt c = t.c.num() * (den / t.c.den());
      content = int_gcd(content, c);
      z.sugar = std::max(z.sugar, t.m.deg);
      z.t.push_back({std::move(c), std::move(t.m)});
    }
    if (content == 0) content = 1;
    if (!z.t.empty() && z.t.front().c < 0) content = -content;
    if (content != 1)
      for (auto& t : z.t) t.c /= content;
    if (factor) *factor = BigRational(content, den);
    return z;
  }

  MultiPoly unconvert(const ZPoly& z, const BigRational& factor = BigRational(1)) const {
    std::vector<Term> terms;
    terms.reserve(z.t.size());
    for (const auto& t : z.t) terms.push_back({factor * BigRational(t.c), t.m});
    return MultiPoly::from_terms(ctx, std::move(terms));
  }

  // Divide out the integer content; the tracked scale absorbs it so the
  // represented value scale * z never changes.
  static void strip(ZPoly& z, BigRational* scale) {
    if (z.t.empty()) return;
    BigInt g(0);
    for (const auto& t : z.t) {
      g = int_gcd(g, t.c);
      if (g == 1) return;
    }
    for (auto& t : z.t) t.c /= g;
    if (scale) *scale *= BigRational(g);
  }

  // Basis/output form: primitive, positive leading coefficient.
  static void normalize(ZPoly& z) {
    strip(z, nullptr);
    if (!z.t.empty() && z.t.front().c < 0)
      for (auto& t : z.t) t.c = -t.c;
  }

  // f <- s*f - c*(x^u * g).  The term f.t[head] cancels by construction;
  // terms before head only pick up the factor s.
  void pseudo_step(ZPoly& f, std::size_t head, const BigInt& s, const BigInt& c,
                   const Monomial& u, const ZPoly& g) const {
    std::vector<ZTerm> r;
    r.reserve(f.t.size() + g.t.size());
    const bool unit = s == 1;
    for (std::size_t i = 0; i < head; ++i) {
      if (!unit) f.t[i].c *= s;
      r.push_back({std::move(f.t[i].c), std::move(f.t[i].m)});
    }
    std::size_t i = head, j = 0;
    Monomial gm;
    bool gm_ready = false;
    while (i < f.t.size() || j < g.t.size()) {
      if (j < g.t.size() && !gm_ready) {
        gm = mono_mul(g.t[j].m, u);
        gm_ready = true;
      }
      int cmp;
      if (i == f.t.size())
        cmp = -1;
      else if (j == g.t.size())
        cmp = 1;
      else
        cmp = order.cmp(f.t[i].m, gm);
      if (cmp > 0) {
        if (!unit) f.t[i].c *= s;
        r.push_back({std::move(f.t[i].c), std::move(f.t[i].m)});
        ++i;
      } else if (cmp < 0) {
        r.push_back({BigInt(-(c * g.t[j].c)), std::move(gm)});
        ++j;
        gm_ready = false;
      } else {
        BigInt nc = f.t[i].c * s - c * g.t[j].c;
        if (nc != 0) r.push_back({std::move(nc), std::move(f.t[i].m)});
        ++i, ++j;
        gm_ready = false;
      }
    }
    f.t = std::move(r);
  }

  // Full pseudo normal form: no term of the result is divisible by any basis
  // leading term.  The exact rational normal form equals scale * result.
  // The lowest-index divisor wins; picking "better looking" reducers (fewer
  // terms) was tried and compounds coefficient growth badly, because late
  // basis elements tend to be short but carry the largest coefficients.
  ZPoly reduce_full(ZPoly f, const std::vector<ZPoly>& basis, BigRational* scale_out = nullptr,
                    const ZPoly* skip = nullptr) const {
    BigRational scale(1);
    std::size_t head = 0;
    int steps_since_strip = 0;
    while (head < f.t.size()) {
      budget_step(budget, "polynomial reduction");
      const Monomial& lm = f.t[head].m;
      const ZPoly* hit = nullptr;
      for (const auto& g : basis) {
        if (&g == skip || g.is_zero() || !mono_divides(g.lt().m, lm)) continue;
        hit = &g;
        break;
      }
      if (!hit) {
        ++head;
        continue;
      }
      const BigInt a = f.t[head].c;
      const BigInt& b = hit->lt().c;
      const BigInt d = int_gcd(a, b);
      BigInt s = b / d, c = a / d;
      if (s < 0) {
        s = -s;
        c = -c;
      }
      const Monomial u = mono_div(lm, hit->lt().m);
      f.sugar = std::max(f.sugar, hit->sugar + u.deg);
      pseudo_step(f, head, s, c, u, *hit);
      if (s != 1) scale /= BigRational(s);
      if (++steps_since_strip >= 8) {
        strip(f, &scale);
        steps_since_strip = 0;
      }
    }
    strip(f, &scale);
    if (scale_out) *scale_out = scale;
    return f;
  }

  ZPoly spoly(const ZPoly& f, const ZPoly& g) const {
    const Monomial tau = mono_lcm(f.lt().m, g.lt().m);
    const BigInt d = int_gcd(f.lt().c, g.lt().c);
    const BigInt cf = g.lt().c / d;  // multiplies f
    const BigInt cg = f.lt().c / d;  // multiplies g
    const Monomial uf = mono_div(tau, f.lt().m);
    const Monomial ug = mono_div(tau, g.lt().m);
    ZPoly r;
    r.sugar = std::max(f.sugar + uf.deg, g.sugar + ug.deg);
    r.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    Monomial fm, gm;
    bool fm_ready = false, gm_ready = false;
    while (i < f.t.size() || j < g.t.size()) {
      if (i < f.t.size() && !fm_ready) {
        fm = mono_mul(f.t[i].m, uf);
        fm_ready = true;
      }
      if (j < g.t.size() && !gm_ready) {
        gm = mono_mul(g.t[j].m, ug);
        gm_ready = true;
      }
      int cmp;
      if (i == f.t.size())
        cmp = -1;
      else if (j == g.t.size())
        cmp = 1;
      else
        cmp = order.cmp(fm, gm);
      if (cmp > 0) {
        r.t.push_back({BigInt(cf * f.t[i].c), std::move(fm)});
        ++i;
        fm_ready = false;
      } else if (cmp < 0) {
        r.t.push_back({BigInt(-(cg * g.t[j].c)), std::move(gm)});
        ++j;
        gm_ready = false;
      } else {
        BigInt nc = cf * f.t[i].c - cg * g.t[j].c;
        if (nc != 0) r.t.push_back({std::move(nc), std::move(fm)});
        ++i, ++j;
        fm_ready = false, gm_ready = false;
      }
    }
    return r;
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    const int c = order->cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Gebauer-Moeller pair update when element t joins the basis.
void update_pairs(std::set<Pair, PairLess>& pairs, const std::vector<ZPoly>& basis,
                  std::size_t t) {
  const Monomial& ht = basis[t].lt().m;

  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    Monomial l = mono_lcm(basis[i].lt().m, ht);
    const std::uint32_t sug = std::max(basis[i].sugar + (l.deg - basis[i].lt().m.deg),
                                       basis[t].sugar + (l.deg - ht.deg));
    fresh.push_back({i, t, std::move(l), sug});
  }

  // chain criterion within the new pairs: drop (i,t) when some (j,t) has a
  // strictly smaller lcm dividing it
  std::vector<bool> drop(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || drop[a] || drop[b]) continue;
      if (!(fresh[b].lcm == fresh[a].lcm) && mono_divides(fresh[b].lcm, fresh[a].lcm))
        drop[a] = true;
    }
  // coprime criterion: a coprime pair clears its whole equal-lcm class
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a] || !mono_coprime(basis[fresh[a].i].lt().m, ht)) continue;
    for (std::size_t b = 0; b < fresh.size(); ++b)
      if (fresh[b].lcm == fresh[a].lcm) drop[b] = true;
  }
  // keep a single representative per lcm value
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      if (drop[a] || drop[b]) continue;
      if (fresh[a].lcm == fresh[b].lcm) drop[a] = true;
    }

  // prune old pairs strictly superseded by t
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Pair& p = *it;
    if (mono_divides(ht, p.lcm) &&
        !(mono_lcm(basis[p.i].lt().m, ht) == p.lcm) &&
        !(mono_lcm(basis[p.j].lt().m, ht) == p.lcm))
      it = pairs.erase(it);
    else
      ++it;
  }

  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (!drop[a]) pairs.insert(fresh[a]);
}

std::vector<ZPoly> interreduce(const Engine& eng, std::vector<ZPoly> basis) {
  // minimal: drop elements whose leading term another element divides
  std::vector<std::size_t> keep;
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) idx[i] = i;
  idx.erase(std::remove_if(idx.begin(), idx.end(),
                           [&](std::size_t i) { return basis[i].is_zero(); }),
            idx.end());
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const int c = eng.order.cmp(basis[a].lt().m, basis[b].lt().m);
    if (c) return c < 0;
    return a < b;
  });
  for (std::size_t i : idx) {
    bool dominated = false;
    for (std::size_t k : keep)
      if (mono_divides(basis[k].lt().m, basis[i].lt().m)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(i);
  }

  std::vector<ZPoly> out;
  for (std::size_t k : keep) out.push_back(std::move(basis[k]));
  // tail-reduce each element by the others until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      ZPoly r = eng.reduce_full(out[i], out, nullptr, &out[i]);
      Engine::normalize(r);
      if (!same_terms(r, out[i])) {
        out[i] = std::move(r);
        changed = true;
      }
    }
  }
  return out;
}

GroebnerBasis finish(const Engine& eng, std::vector<ZPoly> basis, GBStats stats) {
  std::vector<ZPoly> reduced = interreduce(eng, std::move(basis));
  std::sort(reduced.begin(), reduced.end(), [&](const ZPoly& a, const ZPoly& b) {
    return eng.order.cmp(a.lt().m, b.lt().m) < 0;
  });
  GroebnerBasis gb;
  gb.ctx = eng.ctx;
  gb.order = eng.order;
  gb.stats = stats;
  for (const auto& e : reduced) gb.elems.push_back(eng.unconvert(e));
  return gb;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order) {
  Engine eng{f.context(), order, nullptr};
  std::vector<ZPoly> b;
  for (const auto& g : basis) {
    require_same_context(f.context(), g.context(), "normal_form");
    if (!g.is_zero()) b.push_back(eng.convert(g));
  }
  BigRational mu;
  ZPoly zf = eng.convert(f, &mu);
  BigRational scale;
  const ZPoly r = eng.reduce_full(std::move(zf), b, &scale);
  return eng.unconvert(r, mu * scale);
}

GroebnerBasis buchberger(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                         const MonomialOrder& order, Budget* budget) {
  if (order.precedence.size() != ctx->arity())
    throw ContextError("monomial order does not match context arity");
  Engine eng{ctx, order, budget};
  GBStats stats;

  std::vector<ZPoly> basis;
  std::set<Pair, PairLess> pairs(PairLess{&eng.order});
  for (const auto& g : gens) {
    require_same_context(ctx, g.context(), "buchberger");
    if (g.is_zero()) continue;
    ZPoly e = eng.convert(g);
    // skip exact duplicates (common after clearing symmetric differences)
    bool dup = false;
    for (const auto& have : basis)
      if (same_terms(have, e)) dup = true;
    if (dup) continue;
    basis.push_back(std::move(e));
    update_pairs(pairs, basis, basis.size() - 1);
  }

  while (!pairs.empty()) {
    budget_step(budget, "buchberger pair");
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    ++stats.pairs_processed;
    ZPoly s = eng.spoly(basis[p.i], basis[p.j]);
    ZPoly r = eng.reduce_full(std::move(s), basis);
    if (r.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    Engine::normalize(r);
    if (trace_enabled())
      std::fprintf(stderr, "[gb] pairs=%llu queue=%zu basis=%zu new: terms=%zu deg=%u sugar=%u lc_bits=%zu\n",
                   static_cast<unsigned long long>(stats.pairs_processed), pairs.size(),
                   basis.size(), r.t.size(), r.lt().m.deg, r.sugar,
                   mpz_sizeinbase(r.lt().c.get_mpz_t(), 2));
    basis.push_back(std::move(r));
    update_pairs(pairs, basis, basis.size() - 1);
    stats.basis_size_peak = std::max<std::uint64_t>(stats.basis_size_peak, basis.size());
  }

  return finish(eng, std::move(basis), stats);
}

Saturation saturate_nonzero(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                            const std::vector<MultiPoly>& nonzero_factors,
                            const std::string& aux_name) {
  std::string aux = aux_name;
  while (ctx->find(aux)) aux += "_";
  Saturation out;
  out.ctx = VarContext::extended(ctx, aux);
  out.aux_index = out.ctx->arity() - 1;
  for (const auto& g : gens) out.gens.push_back(g.reindexed(out.ctx));
  MultiPoly prod = MultiPoly::variable(out.ctx, out.aux_index);
  for (const auto& f : nonzero_factors) {
    require_same_context(ctx, f.context(), "saturate_nonzero");
    if (f.is_zero()) throw ZeroPolyError("cannot saturate by the zero polynomial");
    prod = prod * f.reindexed(out.ctx);
  }
  out.gens.push_back(prod - MultiPoly::constant(out.ctx, BigRational(1)));
  return out;
}

GroebnerBasis saturated_basis(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                              const std::vector<MultiPoly>& nonzero_factors, Budget* budget,
                              const std::string& aux_name) {
  const Saturation sat = saturate_nonzero(ctx, gens, nonzero_factors, aux_name);
  const MonomialOrder elim = MonomialOrder::elim_first(sat.ctx, sat.ctx->name(sat.aux_index));
  GroebnerBasis ext = buchberger(sat.ctx, sat.gens, elim, budget);
  GroebnerBasis out;
  out.ctx = ctx;
  out.order = MonomialOrder::grevlex_natural(ctx);
  out.stats = ext.stats;
  for (const auto& e : ext.elems)
    if (e.degree_in(sat.aux_index) == 0) out.elems.push_back(e.reindexed(ctx));
  std::sort(out.elems.begin(), out.elems.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return out.order.less(a.leading_term(out.order).m, b.leading_term(out.order).m);
  });
  return out;
}

UniPoly eliminant(const GroebnerBasis& gb, std::size_t var) {
  for (const auto& e : gb.elems) {
    bool only_var = true;
    for (const auto& t : e.terms())
      if (t.m.deg != t.m.exps[var]) {
        only_var = false;
        break;
      }
    if (only_var && !e.is_zero() && e.degree_in(var) > 0)
      return UniPoly::from_multi(e, var).canonical();
  }
  throw NotZeroDimensional("basis has no univariate element in '" + gb.ctx->name(var) + "'");
}

std::vector<Monomial> quotient_staircase(const GroebnerBasis& gb, std::size_t cap) {
  const std::size_t n = gb.ctx->arity();
  std::vector<Monomial> lts;
  for (const auto& e : gb.elems) lts.push_back(e.leading_term(gb.order).m);
  if (lts.empty()) throw NotZeroDimensional("empty basis");

  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint32_t best = 0;
    bool found = false;
    for (const auto& m : lts) {
      if (m.deg == m.exps[v] && m.deg > 0) {
        if (!found || m.exps[v] < best) best = m.exps[v];
        found = true;
      }
      if (m.deg == 0) return {};  // ideal contains a unit
    }
    if (!found)
      throw NotZeroDimensional("no pure power of '" + gb.ctx->name(v) + "' among leading terms");
    bound[v] = best;
  }

  std::vector<Monomial> stair;
  Monomial cur(n);
  // odometer over the box below the pure-power bounds
  for (;;) {
    bool reducible = false;
    for (const auto& m : lts)
      if (mono_divides(m, cur)) {
        reducible = true;
        break;
      }
    if (!reducible) {
      stair.push_back(cur);
      if (stair.size() > cap) throw BudgetExceeded("quotient staircase larger than cap");
    }
    std::size_t v = 0;
    for (; v < n; ++v) {
      if (cur.exps[v] + 1u < bound[v]) {
        ++cur.exps[v];
        ++cur.deg;
        break;
      }
      cur.deg -= cur.exps[v];
      cur.exps[v] = 0;
    }
    if (v == n) break;
  }
  std::sort(stair.begin(), stair.end(),
            [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
  return stair;
}

namespace {

struct LexMonoLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

}  // namespace

GroebnerBasis fglm_to_lex(const GroebnerBasis& src, const MonomialOrder& lex_order,
                          Budget* budget, std::size_t dim_cap) {
  if (lex_order.kind != MonomialOrder::Kind::Lex)
    throw ContextError("fglm_to_lex target order must be lex");
  const std::size_t n = src.ctx->arity();

  // unit ideal short-circuit
  for (const auto& e : src.elems)
    if (!e.is_zero() && e.is_constant()) {
      GroebnerBasis gb;
      gb.ctx = src.ctx;
      gb.order = lex_order;
      gb.elems = {MultiPoly::constant(src.ctx, BigRational(1))};
      gb.stats = src.stats;
      return gb;
    }

  std::vector<Monomial> stair = quotient_staircase(src, dim_cap);
  const std::size_t D = stair.size();
  if (D == 0) throw NotZeroDimensional("empty quotient basis");
  std::map<Monomial, std::size_t, LexMonoLess> stair_index{LexMonoLess{&lex_order}};
  {
    std::size_t k = 0;
    for (const auto& m : stair) stair_index[m] = k++;
  }

  Engine eng{src.ctx, src.order, budget};
  std::vector<ZPoly> basis;
  for (const auto& e : src.elems) basis.push_back(eng.convert(e));

  using Vec = std::vector<BigRational>;
  auto nf_vector = [&](const Monomial& m) -> Vec {
    ZPoly f;
    f.t.push_back({BigInt(1), m});
    f.sugar = m.deg;
    BigRational scale;
    const ZPoly r = eng.reduce_full(std::move(f), basis, &scale);
    Vec v(D, BigRational(0));
    for (const auto& t : r.t) {
      auto it = stair_index.find(t.m);
      if (it == stair_index.end()) throw Error("normal form left the staircase");
      v[it->second] = scale * BigRational(t.c);
    }
    return v;
  };

  // multiplication maps: column j of M[v] is NF(x_v * stair[j])
  std::vector<std::vector<Vec>> mult(n);
  for (std::size_t v = 0; v < n; ++v) {
    mult[v].resize(D);
    for (std::size_t j = 0; j < D; ++j) {
      budget_step(budget, "fglm multiplication map");
      mult[v][j] = nf_vector(mono_mul(stair[j], Monomial::var(n, v)));
    }
  }

  struct Row {
    std::size_t pivot;
    Vec vec;                               // zero at pivots of earlier rows
    std::map<std::size_t, BigRational> combo;  // vec == sum combo[k] * NF(newstair[k]) ... - candidate
  };
  std::vector<Row> rows;

  struct CandInfo {
    long parent;  // index into newstair, -1 for the monomial 1
    std::size_t var;
  };
  std::map<Monomial, CandInfo, LexMonoLess> cand{LexMonoLess{&lex_order}};
  cand[Monomial::one(n)] = {-1, 0};

  std::vector<Monomial> newstair;
  std::vector<Vec> newstair_vec;
  std::vector<Monomial> newlts;
  std::vector<MultiPoly> out;
  GBStats stats = src.stats;

  while (!cand.empty()) {
    budget_step(budget, "fglm candidate");
    ++stats.fglm_candidates;
    if (trace_enabled() && stats.fglm_candidates % 25 == 0)
      std::fprintf(stderr, "[fglm] candidates=%llu stair=%zu out=%zu\n",
                   static_cast<unsigned long long>(stats.fglm_candidates), newstair.size(),
                   out.size());
    const Monomial m = cand.begin()->first;
    const CandInfo info = cand.begin()->second;
    cand.erase(cand.begin());

    bool skip = false;
    for (const auto& lt : newlts)
      if (mono_divides(lt, m)) {
        skip = true;
        break;
      }
    if (skip) continue;

    Vec v;
    if (info.parent < 0) {
      auto it = stair_index.find(Monomial::one(n));
      if (it == stair_index.end()) throw Error("1 missing from quotient basis");
      v.assign(D, BigRational(0));
      v[it->second] = BigRational(1);
    } else {
      // v = M[var] * parent vector
      const Vec& pv = newstair_vec[static_cast<std::size_t>(info.parent)];
      v.assign(D, BigRational(0));
      for (std::size_t j = 0; j < D; ++j) {
        if (pv[j].is_zero()) continue;
        const Vec& col = mult[info.var][j];
        for (std::size_t k = 0; k < D; ++k)
          if (!col[k].is_zero()) v[k] += pv[j] * col[k];
      }
    }

    // eliminate against existing rows
    Vec w = v;
    std::map<std::size_t, BigRational> combo;
    for (const auto& row : rows) {
      if (w[row.pivot].is_zero()) continue;
      const BigRational c = w[row.pivot] / row.vec[row.pivot];
      for (std::size_t k = 0; k < D; ++k)
        if (!row.vec[k].is_zero()) w[k] -= c * row.vec[k];
      for (const auto& [idx, cc] : row.combo) {
        combo[idx] -= c * cc;
        if (combo[idx].is_zero()) combo.erase(idx);
      }
    }

    bool zero = true;
    std::size_t pivot = 0;
    for (std::size_t k = 0; k < D; ++k)
      if (!w[k].is_zero()) {
        zero = false;
        pivot = k;
        break;
      }

    if (zero) {
      // m - sum combo[k] * newstair[k] lies in the ideal
      std::vector<Term> terms;
      terms.push_back({BigRational(1), m});
      for (const auto& [idx, c] : combo) terms.push_back({c, newstair[idx]});
      out.push_back(MultiPoly::from_terms(src.ctx, std::move(terms)).canonical());
      newlts.push_back(m);
      continue;
    }

    const std::size_t t = newstair.size();
    newstair.push_back(m);
    newstair_vec.push_back(v);
    combo[t] = BigRational(1);  // w == v - (eliminated part) == sum combo * NF(newstair)
    rows.push_back({pivot, std::move(w), std::move(combo)});
    if (newstair.size() > dim_cap) throw BudgetExceeded("fglm staircase larger than cap");
    for (std::size_t var = 0; var < n; ++var) {
      const Monomial child = mono_mul(m, Monomial::var(n, var));
      if (!cand.count(child)) cand[child] = {static_cast<long>(t), var};
    }
  }

  GroebnerBasis gb;
  gb.ctx = src.ctx;
  gb.order = lex_order;
  gb.stats = stats;
  gb.elems = std::move(out);
  std::sort(gb.elems.begin(), gb.elems.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return lex_order.less(a.leading_term(lex_order).m, b.leading_term(lex_order).m);
  });
  return gb;
}

GroebnerBasis lex_basis(const VarCtxPtr& ctx, const std::vector<MultiPoly>& gens,
                        const MonomialOrder& lex_order, Budget* budget) {
  GroebnerBasis grev = buchberger(ctx, gens, MonomialOrder::grevlex_natural(ctx), budget);
  try {
    return fglm_to_lex(grev, lex_order, budget);
  } catch (const NotZeroDimensional&) {
    return buchberger(ctx, gens, lex_order, budget);
  }
}

bool is_groebner_basis(const GroebnerBasis& gb, Budget* budget) {
  Engine eng{gb.ctx, gb.order, budget};
  std::vector<ZPoly> basis;
  for (const auto& e : gb.elems) basis.push_back(eng.convert(e));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      budget_step(budget, "s-poly check");
      if (!eng.reduce_full(eng.spoly(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

bool is_reduced_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elems.size(); ++i) {
    const MultiPoly& e = gb.elems[i];
    if (e.is_zero()) return false;
    if (e.leading_term(gb.order).c.sign() <= 0) return false;
    if (e.content() != BigRational(1)) return false;
    for (std::size_t j = 0; j < gb.elems.size(); ++j) {
      if (i == j) continue;
      const Monomial& lt = gb.elems[j].leading_term(gb.order).m;
      for (const auto& t : e.terms())
        if (mono_divides(lt, t.m)) return false;
    }
  }
  return true;
}

}  // namespace einsp
