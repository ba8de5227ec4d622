#include "einsp/proofs.hpp"

#include <utility>

#include "einsp/errors.hpp"
#include "einsp/geometry.hpp"
#include "einsp/polyio.hpp"
#include "einsp/solver.hpp"

namespace einsp {

namespace {

MultiPoly single(const std::string& dir, const std::string& name, const VarCtxPtr& ctx) {
  PolyFile file = read_poly_file(dir + "/" + name);
  if (file.polys.size() != 1)
    throw ParseError(name + ": expected exactly one polynomial");
  return file.polys.front().reindexed(ctx);
}

MultiPoly at_np(const MultiPoly& poly, long n, long p) {
  const VarCtxPtr& ctx = poly.context();
  return poly.substitute(ctx->index_of("n"), BigRational(n))
      .substitute(ctx->index_of("p"), BigRational(p));
}

BigRational value_at(const MultiPoly& poly, long n, long p) {
  MultiPoly v = at_np(poly, n, p);
  if (!v.is_constant()) throw EvalError("specialization left free variables");
  return v.constant_value();
}

// coefficients of f(x + a)
std::vector<BigRational> shifted_coeffs(const UniPoly& f, const BigRational& a) {
  UniPoly acc;
  UniPoly pw = UniPoly::constant(BigRational(1));
  UniPoly base({a, BigRational(1)});
  for (int i = 0; i <= f.degree(); ++i) {
    acc = acc + pw.scaled(f.coeff(i));
    pw = pw * base;
  }
  return acc.coeffs();
}

bool all_nonnegative(const std::vector<BigRational>& cs) {
  bool some_positive = false;
  for (const BigRational& c : cs) {
    if (c.sign() < 0) return false;
    if (c.sign() > 0) some_positive = true;
  }
  return some_positive;
}

CoefficientCertificate certify_coefficient(int power, const UniPoly& c, long p_max) {
  CoefficientCertificate cert;
  cert.power = power;
  if (all_nonnegative(shifted_coeffs(c, BigRational(1)))) {
    cert.positive = true;
    cert.method = "shift p = 1 + q: all coefficients nonnegative";
    return cert;
  }
  // close [1, a] by a Sturm root count, then shift at a for [a, inf)
  if (c.sign_at(BigRational(1)) > 0) {
    SturmChain chain = sturm_chain(c.squarefree_part());
    for (long a = 2; a <= 32; ++a) {
      if (!all_nonnegative(shifted_coeffs(c, BigRational(a)))) continue;
      if (sturm_count(chain, BigRational(1), BigRational(a)) != 0) break;
      cert.positive = true;
      cert.method = "shift p = " + std::to_string(a) +
                    " + q nonnegative; no roots in [1, " + std::to_string(a) +
                    "] (Sturm) and positive at p = 1";
      return cert;
    }
  }
  cert.sampled = true;
  cert.positive = true;
  for (long p = 1; p <= p_max; ++p) {
    if (c.sign_at(BigRational(p)) > 0) continue;
    cert.positive = false;
    cert.method = "not positive at p = " + std::to_string(p);
    return cert;
  }
  cert.method = "positive at integer p = 1 .. " + std::to_string(p_max) +
                " (sampled, not proven)";
  return cert;
}

}  // namespace

TheoremBData TheoremBData::load(const std::string& dir) {
  const std::string d = dir.empty() ? EINSP_DATA_DIR : dir;
  TheoremBData data;
  VarCtxPtr np = VarContext::make({"n", "p"});
  VarCtxPtr u1ctx = VarContext::make({"u1", "n", "p"});
  VarCtxPtr u2ctx = VarContext::make({"u2", "n", "p"});
  VarCtxPtr mp = VarContext::make({"m", "p"});

  data.u1 = single(d, "u1.poly", u1ctx);
  data.u1_at0 = single(d, "u1_at0.poly", np);
  PolyFile at1 = read_poly_file(d + "/u1_at1.poly");
  if (at1.polys.size() != 2)
    throw ParseError("u1_at1.poly: expected the two printed factorizations");
  data.u1_at1_first = at1.polys[0].reindexed(np);
  data.u1_at1_second = at1.polys[1].reindexed(np);
  data.u_np = single(d, "u_np.poly", np);
  data.u_expansion = single(d, "u_expansion.poly", mp);
  data.u2 = single(d, "u2.poly", u2ctx);
  data.b.reserve(9);
  for (int j = 0; j <= 8; ++j)
    data.b.push_back(single(d, "b" + std::to_string(j) + ".poly", np));
  return data;
}

IdentityReport u1_identities(const TheoremBData& data) {
  const VarCtxPtr& np = data.u_np.context();
  std::size_t iu1 = data.u1.context()->index_of("u1");

  IdentityReport report;
  report.at0 = data.u1.substitute(iu1, BigRational(0)).reindexed(np) == data.u1_at0;
  MultiPoly at1 = data.u1.substitute(iu1, BigRational(1)).reindexed(np);
  report.at1_first = at1 == data.u1_at1_first;
  report.at1_second = at1 == data.u1_at1_second;
  report.fifth = data.u1.substitute(iu1, BigRational(1, 5)).reindexed(np) *
                     MultiPoly::constant(np, BigRational(-390625, 64)) ==
                 data.u_np;

  VarCtxPtr mnp = VarContext::make({"m", "n", "p"});
  MultiPoly n_of_m = MultiPoly::variable(mnp, "m") +
                     MultiPoly::constant(mnp, BigRational(4, 3)) * MultiPoly::variable(mnp, "p");
  report.expansion = data.u_np.reindexed(mnp).substitute(mnp->index_of("n"), n_of_m) ==
                     data.u_expansion.reindexed(mnp);
  return report;
}

EndpointSigns endpoint_signs(const TheoremBData& data, long n, long p) {
  if (p < 1 || p > n) throw SpecError("endpoint_signs requires 1 <= p <= n");
  std::size_t iu1 = data.u1.context()->index_of("u1");

  BigRational v0 = value_at(data.u1.substitute(iu1, BigRational(0)), n, p);
  BigRational v1 = value_at(data.u1.substitute(iu1, BigRational(1)), n, p);
  BigRational v5 = value_at(data.u1.substitute(iu1, BigRational(1, 5)), n, p);

  if (v0 != value_at(data.u1_at0, n, p))
    throw EvalError("printed U1(0) disagrees with U1 at this point");
  if (v1 != value_at(data.u1_at1_first, n, p) || v1 != value_at(data.u1_at1_second, n, p))
    throw EvalError("printed U1(1) disagrees with U1 at this point");
  if (v5 * BigRational(-390625, 64) != value_at(data.u_np, n, p))
    throw EvalError("printed u(n, p) disagrees with U1(1/5) at this point");

  return EndpointSigns{v0.sign(), v1.sign(), v5.sign()};
}

bool verify_u1_against_groebner(const TheoremBData& data, long n, long p, Budget* budget) {
  if (p < 2 || p >= n) throw SpecError("verify_u1_against_groebner requires 2 <= p < n");

  EinsteinSystem sys = assemble_system(FlagSpec{n, p});
  std::vector<MultiPoly> nonzero;
  for (std::size_t i = 0; i < sys.ctx->arity(); ++i)
    nonzero.push_back(MultiPoly::variable(sys.ctx, i));
  nonzero.push_back(MultiPoly::variable(sys.ctx, "u1") -
                    MultiPoly::constant(sys.ctx, BigRational(1)));

  GroebnerBasis grevlex = saturated_basis(sys.ctx, sys.polys, nonzero, budget);
  MonomialOrder lex = MonomialOrder::lex(sys.ctx, {"u0", "u2", "u1"});
  GroebnerBasis lexgb = fglm_to_lex(grevlex, lex, budget);
  UniPoly elim = eliminant(lexgb, sys.ctx->index_of("u1"));

  UniPoly printed =
      UniPoly::from_multi(at_np(data.u1, n, p), data.u1.context()->index_of("u1"));
  // both canonical: equality iff one is a positive rational multiple of the other
  return elim.canonical() == printed.canonical();
}

bool u2_sign_pattern(const TheoremBData& data, long n, long p) {
  if (p < 1 || p >= n) throw SpecError("u2_sign_pattern requires 1 <= p < n");
  UniPoly u2 = UniPoly::from_multi(at_np(data.u2, n, p), data.u2.context()->index_of("u2"));
  if (u2.degree() != 8) return false;
  for (int k = 0; k <= 8; ++k)
    if (u2.coeff(k).sign() != (k % 2 == 0 ? 1 : -1)) return false;
  return true;
}

bool b_sign_pattern(const TheoremBData& data, long n, long p) {
  if (p < 2 || 4 * p > 3 * n) throw SpecError("b_sign_pattern requires 2 <= p and 4p <= 3n");
  for (int j = 0; j <= 8; ++j)
    if (value_at(data.b[j], n, p).sign() != (j % 2 == 0 ? 1 : -1)) return false;
  return true;
}

ExpansionReport u_expansion_certificate(const TheoremBData& data, long p_max) {
  if (p_max < 1) throw SpecError("u_expansion_certificate requires p_max >= 1");
  const VarCtxPtr& mp = data.u_expansion.context();
  std::size_t im = mp->index_of("m");
  std::size_t ip = mp->index_of("p");

  // split u(m + 4p/3, p) into coefficients of powers of m
  std::vector<std::vector<BigRational>> buckets;
  for (const auto& term : data.u_expansion.terms()) {
    std::size_t k = term.m.exps.size() > im ? term.m.exps[im] : 0;
    std::size_t e = term.m.exps.size() > ip ? term.m.exps[ip] : 0;
    if (buckets.size() <= k) buckets.resize(k + 1);
    if (buckets[k].size() <= e) buckets[k].resize(e + 1, BigRational(0));
    buckets[k][e] = buckets[k][e] + term.c;
  }

  ExpansionReport report;
  for (std::size_t k = 0; k < buckets.size(); ++k) {
    UniPoly c(std::move(buckets[k]));
    if (c.is_zero()) continue;
    CoefficientCertificate cert = certify_coefficient(static_cast<int>(k), c, p_max);
    report.all_positive = report.all_positive && cert.positive;
    report.fully_certified = report.fully_certified && cert.positive && !cert.sampled;
    report.coefficients.push_back(std::move(cert));
  }
  return report;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::map<std::string, std::uint64_t> transcription_checksums(const TheoremBData& data) {
  std::map<std::string, std::uint64_t> sums;
  auto put = [&](const std::string& name, const MultiPoly& poly) {
    sums[name] = fnv1a64(poly_to_text(poly));
  };
  put("u1", data.u1);
  put("u1_at0", data.u1_at0);
  put("u1_at1_first", data.u1_at1_first);
  put("u1_at1_second", data.u1_at1_second);
  put("u_np", data.u_np);
  put("u_expansion", data.u_expansion);
  put("u2", data.u2);
  for (int j = 0; j <= 8; ++j) put("b" + std::to_string(j), data.b[j]);
  return sums;
}

}  // namespace einsp
