#include "einsp/jsonio.hpp"

#include "einsp/errors.hpp"
#include "einsp/polyio.hpp"

namespace einsp {

namespace {

std::string midpoint_decimal(const RatInterval& iv, int digits) {
  return iv.mid().decimal(digits);
}

Json isolating_json(const IsolatingInterval& iv, int digits) {
  Json j;
  j["interval"] = {iv.lo.str(), iv.hi.str()};
  j["approx"] = iv.exact ? iv.exact->decimal(digits)
                         : ((iv.lo + iv.hi) / BigRational(2)).decimal(digits);
  j["exact"] = iv.exact ? Json(iv.exact->str()) : Json(nullptr);
  return j;
}

}  // namespace

Json interval_json(const RatInterval& iv, int digits) {
  Json j;
  j["interval"] = {iv.lo.str(), iv.hi.str()};
  j["approx"] = midpoint_decimal(iv, digits);
  return j;
}

Json solution_json(const FibrationSpec& spec, const EinsteinSolution& sol, int digits) {
  Json j;
  j["spec"] = spec_name(spec);
  j["branch"] = sol.branch;
  j["certified"] = sol.certified;
  Json coords = Json::object();
  for (std::size_t i = 0; i < sol.vars.size(); ++i)
    coords[sol.vars[i]] = isolating_json(sol.coords[i], digits);
  j["coords"] = std::move(coords);
  j["lambda"] = interval_json(sol.lambda, digits);
  j["residual_bound"] = decimal_upper(sol.residual_bound, digits + 12);
  j["class"] = sol.classification;
  j["symmetry_partner"] =
      sol.symmetry_partner ? Json(*sol.symmetry_partner) : Json(nullptr);
  return j;
}

Json solve_json(const FibrationSpec& spec, const std::vector<EinsteinSolution>& sols,
                int digits) {
  Json j;
  j["spec"] = spec_name(spec);
  j["count"] = sols.size();
  Json list = Json::array();
  for (const EinsteinSolution& sol : sols) list.push_back(solution_json(spec, sol, digits));
  j["solutions"] = std::move(list);
  return j;
}

Json system_json(const EinsteinSystem& sys) {
  Json j;
  j["spec"] = spec_name(sys.spec);
  j["vars"] = sys.ctx->names();
  j["normalized"] = sys.normalized_variable;
  Json polys = Json::array();
  for (const MultiPoly& p : sys.polys) polys.push_back(poly_to_text(p));
  j["polys"] = std::move(polys);
  j["provenance"] = sys.provenance;
  return j;
}

Json ricci_json(const FibrationSpec& spec, const std::vector<BigRational>& metric,
                const std::vector<BigRational>& components, int digits) {
  std::vector<std::string> labels = summand_labels(spec);
  Json j;
  j["spec"] = spec_name(spec);
  Json m = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) m[labels[i]] = metric[i].str();
  j["metric"] = std::move(m);
  Json comps = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Json c;
    c["exact"] = components[i].str();
    c["float"] = components[i].decimal(digits);
    comps["r" + labels[i]] = std::move(c);
  }
  j["components"] = std::move(comps);
  return j;
}

IdealInput ideal_from_json(const Json& doc) {
  try {
    IdealInput in;
    std::vector<std::string> names = doc.at("vars").get<std::vector<std::string>>();
    in.ctx = VarContext::make(names);

    in.order.kind = MonomialOrder::Kind::GrevLex;
    std::vector<std::string> prec = names;
    if (doc.contains("order")) {
      const Json& o = doc.at("order");
      std::string kind = o.value("kind", "grevlex");
      if (kind == "lex")
        in.order.kind = MonomialOrder::Kind::Lex;
      else if (kind != "grevlex")
        throw ParseError("unknown order kind: " + kind);
      if (o.contains("precedence"))
        prec = o.at("precedence").get<std::vector<std::string>>();
    }
    if (prec.size() != names.size())
      throw ParseError("order precedence must list every variable once");
    in.order.precedence.clear();
    for (const std::string& name : prec) {
      auto idx = in.ctx->find(name);
      if (!idx) throw ParseError("precedence names unknown variable: " + name);
      in.order.precedence.push_back(static_cast<std::uint32_t>(*idx));
    }

    for (const auto& text : doc.at("polys"))
      in.polys.push_back(poly_from_text(text.get<std::string>(), in.ctx));
    return in;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("ideal document: ") + e.what());
  }
}

Json ideal_json(const VarCtxPtr& ctx, const MonomialOrder& order,
                const std::vector<MultiPoly>& polys) {
  Json j;
  j["vars"] = ctx->names();
  Json o;
  o["kind"] = order.kind_name();
  std::vector<std::string> prec;
  for (std::uint32_t v : order.precedence) prec.push_back(ctx->name(v));
  o["precedence"] = std::move(prec);
  j["order"] = std::move(o);
  Json list = Json::array();
  for (const MultiPoly& p : polys) list.push_back(poly_to_text(p));
  j["polys"] = std::move(list);
  return j;
}

Json basis_json(const GroebnerBasis& gb) {
  Json j = ideal_json(gb.ctx, gb.order, gb.elems);
  Json stats;
  stats["pairs_processed"] = gb.stats.pairs_processed;
  stats["reductions_to_zero"] = gb.stats.reductions_to_zero;
  stats["basis_size_peak"] = gb.stats.basis_size_peak;
  stats["fglm_candidates"] = gb.stats.fglm_candidates;
  j["stats"] = std::move(stats);
  return j;
}

Json roots_json(const std::string& var, const UniPoly& poly,
                const std::vector<IsolatingInterval>& roots, int digits) {
  Json j;
  j["var"] = var;
  j["degree"] = poly.degree();
  j["count"] = roots.size();
  Json list = Json::array();
  for (const IsolatingInterval& iv : roots) list.push_back(isolating_json(iv, digits));
  j["roots"] = std::move(list);
  return j;
}

Json census_json(const std::string& family, const std::vector<CensusRow>& rows) {
  Json j;
  j["family"] = family;
  Json list = Json::array();
  for (const CensusRow& row : rows) {
    Json r;
    r["n"] = row.n;
    r["jensen"] = row.jensen;
    r["adn"] = row.adn;
    r["new"] = row.new_metrics;
    r["complete"] = row.complete;
    r["conjectured_jensen"] =
        row.conjectured_jensen ? Json(*row.conjectured_jensen) : Json(nullptr);
    r["conjectured_new"] =
        row.conjectured_new ? Json(*row.conjectured_new) : Json(nullptr);
    list.push_back(std::move(r));
  }
  j["rows"] = std::move(list);
  return j;
}

Json identity_json(const IdentityReport& report) {
  Json j;
  j["u1_at_0_square_product"] = report.at0;
  j["u1_at_1_first_factorization"] = report.at1_first;
  j["u1_at_1_grouped_factorization"] = report.at1_second;
  j["u1_at_fifth_vs_u_np"] = report.fifth;
  j["u_expansion_matches"] = report.expansion;
  j["all"] = report.all();
  return j;
}

Json expansion_json(const ExpansionReport& report) {
  Json j;
  j["all_positive"] = report.all_positive;
  j["fully_certified"] = report.fully_certified;
  Json list = Json::array();
  for (const CoefficientCertificate& c : report.coefficients) {
    Json e;
    e["power"] = c.power;
    e["positive"] = c.positive;
    e["sampled"] = c.sampled;
    e["method"] = c.method;
    list.push_back(std::move(e));
  }
  j["coefficients"] = std::move(list);
  return j;
}

std::string decimal_upper(const BigRational& v, int digits) {
  BigInt scale = int_pow(BigInt(10), static_cast<unsigned long>(digits));
  BigInt num = v.num() * scale;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.den().get_mpz_t());
  return BigRational(q, scale).decimal(digits);
}

std::string json_text(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace einsp
