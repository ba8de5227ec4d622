#include "einsp/solver.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "einsp/expr.hpp"

namespace einsp {

namespace {

const WallachSpec* as_wallach(const FibrationSpec& s) { return std::get_if<WallachSpec>(&s); }

std::string component_name(const std::string& label) { return "r" + label.substr(1); }

EinsteinSystem assemble_over(const FibrationSpec& spec, const VarCtxPtr& ctx,
                             const std::vector<ExprPtr>& comps,
                             const std::vector<std::string>& labels) {
  EinsteinSystem sys;
  sys.spec = spec;
  sys.ctx = ctx;
  sys.normalized_variable = labels.back();
  const ExprPtr one = RationalExpr::integer(1);
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    const ExprPtr diff = (comps[i] - comps[i + 1])->substitute(labels.back(), one);
    const MultiPoly num = clear_denominators(diff, ctx).num;
    if (num.is_zero())
      throw SpecError("components " + component_name(labels[i]) + " and " +
                      component_name(labels[i + 1]) + " coincide identically");
    sys.polys.push_back(num.primitive_sign_preserved());
    sys.provenance.push_back(component_name(labels[i]) + " - " + component_name(labels[i + 1]));
  }
  return sys;
}

BigRational midpoint(const IsolatingInterval& iv) {
  return iv.exact ? *iv.exact : (iv.lo + iv.hi) / BigRational(2);
}

RatInterval tight_interval(const IsolatingInterval& iv) {
  return iv.exact ? RatInterval::point(*iv.exact) : iv.to_interval();
}

IsolatingInterval point_coord(const BigRational& v) { return IsolatingInterval{v, v, v}; }

IsolatingInterval coord_from(const RatInterval& iv) {
  IsolatingInterval out{iv.lo, iv.hi, std::nullopt};
  if (iv.is_point()) out.exact = iv.lo;
  return out;
}

// ---- back-substitution through the lex basis ----

// e == A*v + B with A, B free of v; nullopt unless deg_v(e) == 1.
std::optional<std::pair<MultiPoly, MultiPoly>> linear_split(const MultiPoly& e, std::size_t v) {
  std::vector<Term> a, b;
  for (const auto& t : e.terms()) {
    if (t.m.exps[v] == 0) {
      b.push_back(t);
      continue;
    }
    if (t.m.exps[v] > 1) return std::nullopt;
    Term s = t;
    s.m.exps[v] = 0;
    s.m.deg -= 1;
    a.push_back(std::move(s));
  }
  if (a.empty()) return std::nullopt;
  return std::make_pair(MultiPoly::from_terms(e.context(), std::move(a)),
                        MultiPoly::from_terms(e.context(), std::move(b)));
}

// Box over d.ctx spanned by the root interval; each remaining coordinate is
// solved from a basis element linear in it.  nullopt while some divisor
// interval still straddles zero (the caller then tightens the root).  Under
// lex, an element whose leading term is free of the more significant
// variables is free of them everywhere, so the splits below only ever read
// coordinates that are already known.
std::optional<std::vector<RatInterval>> derive_box(const SolutionDerivation& d) {
  std::vector<RatInterval> box(d.ctx->arity());
  box[d.root_var] = tight_interval(d.root);
  const auto& prec = d.lex.precedence;  // most significant first
  if (prec.back() != d.root_var)
    throw Error("eliminant variable must be the least significant under lex");
  for (std::size_t k = prec.size() - 1; k-- > 0;) {
    const std::size_t v = prec[k];
    const std::vector<std::size_t> higher(prec.begin(), prec.begin() + k);
    bool solved = false;
    for (const auto& e : d.elems) {
      const Term& lt = e.leading_term(d.lex);
      bool clean = lt.m.exps[v] == 1;
      for (const std::size_t h : higher) clean = clean && lt.m.exps[h] == 0;
      if (!clean) continue;
      const auto ab = linear_split(e, v);
      if (!ab) continue;
      const RatInterval A = eval_poly(ab->first, box);
      if (A.sign() == 0) return std::nullopt;
      box[v] = iv_div(iv_neg(eval_poly(ab->second, box)), A);
      solved = true;
      break;
    }
    if (!solved)
      throw Error("lex basis has no element linear in '" + d.ctx->name(v) +
                  "'; back-substitution needs a triangular basis");
  }
  return box;
}

void tighten_root(SolutionDerivation& d, Budget* budget) {
  // 32 extra bits per round; the divisor and width checks converge after a
  // handful of rounds even with degree-30 eliminants
  const BigRational target = d.root.width() / BigRational(BigInt(1) << 32);
  d.root = refine_root(d.sqfree, d.root, target, budget);
}

void set_coords(EinsteinSolution& sol, const SolutionDerivation& d,
                const std::vector<RatInterval>& box) {
  for (std::size_t i = 0; i < sol.vars.size(); ++i) {
    const std::string& name = sol.vars[i];
    if (const auto idx = d.ctx->find(name)) {
      sol.coords[i] = d.root_var == *idx ? d.root : coord_from(box[*idx]);
      continue;
    }
    bool pinned = false;
    for (const auto& [pname, pval] : d.pinned)
      if (pname == name) {
        sol.coords[i] = point_coord(pval);
        pinned = true;
      }
    if (!pinned) sol.coords[i] = point_coord(BigRational(1));  // normalized variable
  }
}

// ---- branch pipeline ----

struct BranchSetup {
  std::string name;
  VarCtxPtr ctx;
  std::vector<MultiPoly> gens;
  std::vector<MultiPoly> nonzero;
  std::vector<std::string> lex_names;  // most significant first
  std::vector<UniPoly> known_factors;  // divided out of the eliminant where they appear
  std::vector<std::pair<std::string, BigRational>> pinned;
};

// Derives the coordinate box at width 1e-12 (discarding roots with a
// non-positive coordinate), then certifies and classifies.
std::optional<EinsteinSolution> build_solution(const FibrationSpec& spec, const BranchSetup& bs,
                                               const std::shared_ptr<SolutionDerivation>& deriv,
                                               const SolveOptions& opts) {
  static const BigRational coord_width(1, 1000000000000L);  // 1e-12
  std::vector<RatInterval> box;
  for (int round = 0;; ++round) {
    if (round > 200) throw Error("back-substitution failed to converge");
    if (opts.budget) opts.budget->step("back-substitution");
    if (deriv->root.lo.sign() > 0 || deriv->root.exact) {
      auto maybe = derive_box(*deriv);
      if (maybe) {
        int verdict = 1;
        for (const auto& iv : *maybe) {
          if (iv.hi.sign() <= 0) return std::nullopt;  // provably non-positive coordinate
          if (iv.lo.sign() <= 0 || iv.width() > coord_width) verdict = 0;
        }
        if (verdict == 1) {
          box = std::move(*maybe);
          break;
        }
      }
    }
    tighten_root(*deriv, opts.budget);
  }

  EinsteinSolution sol;
  sol.vars = summand_labels(spec);
  sol.coords.resize(sol.vars.size());
  sol.branch = bs.name;
  sol.derivation = deriv;
  set_coords(sol, *deriv, box);
  certify(sol, spec, opts.tol, opts.budget);
  if (sol.certified) sol.classification = classify(sol, spec, opts.ctol);
  return sol;
}

std::vector<EinsteinSolution> solve_branch(const FibrationSpec& spec, const BranchSetup& bs,
                                           const SolveOptions& opts) {
  const GroebnerBasis grev = saturated_basis(bs.ctx, bs.gens, bs.nonzero, opts.budget);
  if (grev.elems.size() == 1 && grev.elems[0].is_constant()) return {};  // empty branch
  const MonomialOrder lex = MonomialOrder::lex(bs.ctx, bs.lex_names);
  GroebnerBasis lexgb = fglm_to_lex(grev, lex, opts.budget);
  const std::size_t root_var = bs.ctx->index_of(bs.lex_names.back());
  UniPoly elim = eliminant(lexgb, root_var);
  for (const auto& f : bs.known_factors)
    for (;;) {
      UniPoly rem;
      const UniPoly q = UniPoly::divmod(elim, f, rem);
      if (!rem.is_zero() || q.is_zero()) break;
      elim = q.canonical();
    }

  IsolationOptions iso;
  iso.positive_only = true;
  iso.target_width = BigRational(1, 1000000);
  iso.budget = opts.budget;
  const UniPoly sq = elim.squarefree_part();
  const std::vector<IsolatingInterval> roots = isolate_real_roots(sq, iso);

  std::vector<EinsteinSolution> out;
  for (const auto& rt : roots) {
    auto deriv = std::make_shared<SolutionDerivation>();
    deriv->ctx = bs.ctx;
    deriv->lex = lex;
    deriv->elems = lexgb.elems;
    deriv->root_var = root_var;
    deriv->sqfree = sq;
    deriv->root = rt;
    deriv->pinned = bs.pinned;
    auto sol = build_solution(spec, bs, deriv, opts);
    if (sol) out.push_back(std::move(*sol));
  }
  return out;
}

std::vector<MultiPoly> coordinate_factors(const VarCtxPtr& ctx) {
  std::vector<MultiPoly> fs;
  for (std::size_t i = 0; i < ctx->arity(); ++i) fs.push_back(MultiPoly::variable(ctx, i));
  return fs;
}

// Substitutes var = value into every generator and drops the variable.
std::vector<MultiPoly> pin_variable(const std::vector<MultiPoly>& gens, const VarCtxPtr& from,
                                    const std::string& var, const BigRational& value,
                                    const VarCtxPtr& to) {
  const std::size_t idx = from->index_of(var);
  std::vector<MultiPoly> out;
  for (const auto& g : gens) {
    MultiPoly q = g.substitute(idx, value);
    if (q.is_zero()) continue;
    out.push_back(q.reindexed(to).primitive_sign_preserved());
  }
  return out;
}

// Swap x1 <-> x2, x13 <-> x23, then rescale so the new x23 equals 1.  The
// k1 = k2 solution set is closed under this map; record where each solution
// lands (possibly itself).
void assign_partners(std::vector<EinsteinSolution>& sols) {
  static const BigRational match_tol(1, 1000000);
  std::vector<std::vector<BigRational>> mids;
  for (const auto& s : sols) {
    std::vector<BigRational> m;
    for (const auto& c : s.coords) m.push_back(midpoint(c));
    mids.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& m = mids[i];  // (x1, x2, x12, x13, x23 = 1)
    const BigRational& s = m[3];
    const std::vector<BigRational> mapped{m[1] / s, m[0] / s, m[2] / s, m[4] / s};
    for (std::size_t j = 0; j < sols.size(); ++j) {
      bool hit = true;
      for (std::size_t c = 0; c < mapped.size() && hit; ++c)
        hit = (mapped[c] - mids[j][c]).abs() <= match_tol;
      if (hit) {
        sols[i].symmetry_partner = j;
        break;
      }
    }
  }
}

}  // namespace

EinsteinSystem assemble_system(const FibrationSpec& spec) {
  validate_spec(spec);
  const auto labels = summand_labels(spec);
  const VarCtxPtr ctx =
      VarContext::make(std::vector<std::string>(labels.begin(), labels.end() - 1));
  return assemble_over(spec, ctx, ricci_closed_form(spec), labels);
}

EinsteinSystem assemble_flag_symbolic() {
  const FibrationSpec spec = FlagSpec{};  // placeholder; n and p stay symbolic
  const VarCtxPtr ctx = VarContext::make({"u0", "u1", "u2", "n", "p"});
  return assemble_over(spec, ctx, flag_ricci_symbolic(), summand_labels(spec));
}

BigRational certify(EinsteinSolution& sol, const FibrationSpec& spec, const BigRational& tol,
                    Budget* budget) {
  const auto comps = ricci_closed_form(spec);
  for (int round = 0;; ++round) {
    std::map<std::string, RatInterval> box;
    for (std::size_t i = 0; i < sol.vars.size(); ++i)
      box[sol.vars[i]] = tight_interval(sol.coords[i]);
    std::vector<RatInterval> rs;
    rs.reserve(comps.size());
    for (const auto& c : comps) rs.push_back(c->eval(box));
    BigRational lo = rs[0].lo, hi = rs[0].hi;       // hull
    BigRational ilo = rs[0].lo, ihi = rs[0].hi;     // intersection
    for (const auto& r : rs) {
      lo = std::min(lo, r.lo), hi = std::max(hi, r.hi);
      ilo = std::max(ilo, r.lo), ihi = std::min(ihi, r.hi);
    }
    sol.residual_bound = hi - lo;  // >= max |r_i - r_j| over the box
    // every component interval contains the true common value, so the
    // intersection is nonempty exactly when the box is tight enough
    sol.lambda = ilo <= ihi ? RatInterval(ilo, ihi) : RatInterval(lo, hi);
    if (sol.residual_bound < tol) {
      sol.certified = true;
      return sol.residual_bound;
    }
    if (!sol.derivation || round > 200) {
      sol.certified = false;
      return sol.residual_bound;
    }
    if (budget) budget->step("certification");
    auto d = std::make_shared<SolutionDerivation>(*sol.derivation);
    tighten_root(*d, budget);
    const auto nb = derive_box(*d);
    sol.derivation = std::move(d);
    if (nb) set_coords(sol, *sol.derivation, *nb);
  }
}

std::string classify(const EinsteinSolution& sol, const FibrationSpec& spec,
                     const BigRational& ctol) {
  std::map<std::string, BigRational> m;
  for (std::size_t i = 0; i < sol.vars.size(); ++i) m[sol.vars[i]] = midpoint(sol.coords[i]);
  const auto close = [&](const BigRational& a, const BigRational& b) {
    return (a - b).abs() <= ctol;
  };
  if (as_wallach(spec)) {
    if (!close(m["x13"], m["x23"])) return "New";  // off the x13 = x23 = 1 locus
    if (close(m["x1"], m["x2"]) && close(m["x1"], m["x12"])) return "Jensen";
    if (close(m["x1"], m["x2"])) return "ADN";
    return "New";
  }
  if (close(m["u0"], m["u1"]) || close(m["u0"], m["u3"]) || close(m["u1"], m["u3"]))
    return "Jensen";
  return "New";
}

std::vector<EinsteinSolution> solve_einstein(const FibrationSpec& spec,
                                             const SolveOptions& opts) {
  validate_spec(spec);
  const EinsteinSystem sys = assemble_system(spec);
  std::vector<BranchSetup> branches;

  const bool wallach = as_wallach(spec) != nullptr;
  const std::string special_var = wallach ? "x13" : "u1";
  if (opts.generic_branch) {
    BranchSetup g;
    g.name = "generic";
    g.ctx = sys.ctx;
    g.gens = sys.polys;
    g.nonzero = coordinate_factors(sys.ctx);
    const MultiPoly special = MultiPoly::variable(sys.ctx, special_var) -
                              MultiPoly::constant(sys.ctx, BigRational(1));
    if (wallach) {
      g.lex_names = {"x2", "x1", "x12", "x13"};
    } else {
      g.lex_names = {"u0", "u2", "u1"};
      g.nonzero.push_back(special);  // keep u1 = 1 out of the generic branch
    }
    g.known_factors = {UniPoly({BigRational(-1), BigRational(1)})};  // x13 - 1 / u1 - 1
    branches.push_back(std::move(g));
  }
  if (opts.special_branch) {
    BranchSetup s;
    s.name = special_var + "=1";
    std::vector<std::string> rest;
    for (const auto& n : sys.ctx->names())
      if (n != special_var) rest.push_back(n);
    s.ctx = VarContext::make(rest);
    s.gens = pin_variable(sys.polys, sys.ctx, special_var, BigRational(1), s.ctx);
    s.nonzero = coordinate_factors(s.ctx);
    s.lex_names = wallach ? std::vector<std::string>{"x2", "x1", "x12"}
                          : std::vector<std::string>{"u0", "u2"};
    s.pinned = {{special_var, BigRational(1)}};
    branches.push_back(std::move(s));
  }

  std::vector<EinsteinSolution> out;
  for (const auto& bs : branches) {
    auto part = solve_branch(spec, bs, opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EinsteinSolution& a, const EinsteinSolution& b) {
                     return a.branch < b.branch;
                   });
  if (const auto* w = as_wallach(spec); w && w->k1 == w->k2) assign_partners(out);
  return out;
}

std::vector<CensusRow> census(const std::string& family, long n_max, const SolveOptions& opts) {
  int which = 0;
  if (family == "n-2,1,1") which = 1;
  if (family == "n-3,1,2") which = 2;
  if (!which)
    throw SpecError("unknown census family '" + family + "' (supported: n-2,1,1 and n-3,1,2)");
  const long n_min = which == 1 ? 3 : 4;
  if (n_max < n_min)
    throw SpecError("census family " + family + " needs n >= " + std::to_string(n_min));

  std::vector<CensusRow> rows;
  for (long n = n_min; n <= n_max; ++n) {
    CensusRow row;
    row.n = n;
    if (which == 1) {
      row.conjectured_jensen = 2;
      row.conjectured_new = n <= 7 ? 6 : n <= 29 ? 8 : 10;
    } else if (n >= 5) {
      row.conjectured_jensen = 2;
      row.conjectured_new = n <= 9 ? 6 : n == 10 ? 8 : n <= 27 ? 6 : n <= 40 ? 8 : 10;
    }
    const WallachSpec w =
        which == 1 ? WallachSpec{n - 2, 1, 1} : WallachSpec{n - 3, 1, 2};
    try {
      for (const auto& s : solve_einstein(w, opts)) {
        if (!s.certified) {
          row.complete = false;
          continue;
        }
        if (s.classification == "Jensen")
          ++row.jensen;
        else if (s.classification == "ADN")
          ++row.adn;
        else
          ++row.new_metrics;
      }
    } catch (const BudgetExceeded&) {
      row.complete = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace einsp
