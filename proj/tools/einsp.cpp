// Command-line front end: assembles and solves the Einstein systems of the
// two Sp(n)/Sp(n-p) fibrations, runs the Groebner / root-isolation machinery
// on user input, and machine-checks the sign certificates.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 budget exhausted,
// 3 a verification claim failed (verify-theorem-b only).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "einsp/errors.hpp"
#include "einsp/geometry.hpp"
#include "einsp/groebner.hpp"
#include "einsp/jsonio.hpp"
#include "einsp/polyio.hpp"
#include "einsp/proofs.hpp"
#include "einsp/solver.hpp"
#include "einsp/unipoly.hpp"

namespace {

using namespace einsp;

struct Common {
  bool json = false;
  int digits = 6;
  std::string tol = "1e-9";
  double max_seconds = 1800.0;
  std::uint64_t max_steps = 0;

  Budget budget() const { return Budget::from_env_or(max_seconds, max_steps); }
  BigRational tolerance() const {
    BigRational t(tol);
    if (t.sign() <= 0) throw SpecError("--tol must be positive");
    return t;
  }
};

void add_common(CLI::App* cmd, Common& common, bool with_tol = false) {
  cmd->add_flag("--json", common.json, "emit JSON instead of text");
  cmd->add_option("--digits", common.digits, "decimal digits in approximations")
      ->check(CLI::Range(1, 30));
  if (with_tol) cmd->add_option("--tol", common.tol, "residual certification target");
  cmd->add_option("--max-seconds", common.max_seconds,
                  "time budget (EINSTEIN_SP_BUDGET_SECONDS overrides)");
  cmd->add_option("--max-steps", common.max_steps, "work budget, 0 = unlimited");
}

std::vector<long> parse_longs(const std::string& text, std::size_t count,
                              const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SpecError(what + ": expected integers, got '" + item + "'");
    }
  }
  if (out.size() != count)
    throw SpecError(what + ": expected " + std::to_string(count) + " comma-separated values");
  return out;
}

struct SpecFlags {
  std::string fibration;
  std::string k;
  long n = 0, p = 0;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--fibration", flags.fibration, "wallach | flag")->required();
  cmd->add_option("--k", flags.k, "Wallach parameters k1,k2,k3");
  cmd->add_option("--n", flags.n, "flag parameter n");
  cmd->add_option("--p", flags.p, "flag parameter p");
}

FibrationSpec parse_spec(const SpecFlags& flags) {
  if (flags.fibration == "wallach") {
    if (flags.k.empty()) throw SpecError("wallach fibration needs --k k1,k2,k3");
    std::vector<long> k = parse_longs(flags.k, 3, "--k");
    WallachSpec spec{k[0], k[1], k[2]};
    validate_spec(spec);
    return spec;
  }
  if (flags.fibration == "flag") {
    if (flags.n == 0 || flags.p == 0) throw SpecError("flag fibration needs --n and --p");
    FlagSpec spec{flags.n, flags.p};
    validate_spec(spec);
    return spec;
  }
  throw SpecError("--fibration must be wallach or flag");
}

std::string read_stream(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------- solve ----

int run_solve(const SpecFlags& flags, const Common& common) {
  FibrationSpec spec = parse_spec(flags);
  Budget budget = common.budget();
  SolveOptions opts;
  opts.tol = common.tolerance();
  opts.budget = &budget;
  std::vector<EinsteinSolution> sols = solve_einstein(spec, opts);

  if (common.json) {
    std::cout << json_text(solve_json(spec, sols, common.digits));
    return 0;
  }
  std::cout << spec_name(spec) << ": " << sols.size() << " solutions\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const EinsteinSolution& s = sols[i];
    std::cout << "[" << i << "] " << s.branch << " " << s.classification
              << (s.certified ? " certified" : " uncertified");
    for (std::size_t v = 0; v < s.vars.size(); ++v) {
      const IsolatingInterval& iv = s.coords[v];
      BigRational mid = iv.exact ? *iv.exact : (iv.lo + iv.hi) / BigRational(2);
      std::cout << " " << s.vars[v] << "=" << mid.decimal(common.digits);
    }
    std::cout << " lambda=" << s.lambda.mid().decimal(common.digits)
              << " residual<=" << decimal_upper(s.residual_bound, common.digits + 12);
    if (s.symmetry_partner) std::cout << " partner=" << *s.symmetry_partner;
    std::cout << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- system ----

int run_system(const SpecFlags& flags, const Common& common) {
  FibrationSpec spec = parse_spec(flags);
  EinsteinSystem sys = assemble_system(spec);
  if (common.json) {
    std::cout << json_text(system_json(sys));
    return 0;
  }
  std::cout << "# " << spec_name(spec) << ", " << sys.normalized_variable << " = 1\n";
  std::cout << "# rows: ";
  for (std::size_t i = 0; i < sys.provenance.size(); ++i)
    std::cout << (i ? "; " : "") << sys.provenance[i];
  std::cout << "\n";
  PolyFile file{sys.ctx, sys.polys};
  std::cout << poly_file_to_text(file);
  return 0;
}

// ---------------------------------------------------------------- ricci ----

int run_ricci(const SpecFlags& flags, const std::string& metric_text, const Common& common) {
  FibrationSpec spec = parse_spec(flags);
  std::vector<std::string> labels = summand_labels(spec);

  std::vector<BigRational> metric;
  std::stringstream ss(metric_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      metric.push_back(BigRational(item));
    } catch (const std::exception&) {
      throw SpecError("--metric: bad rational '" + item + "'");
    }
    if (metric.back().sign() <= 0) throw SpecError("--metric entries must be positive");
  }
  if (metric.size() != labels.size())
    throw SpecError("--metric: expected " + std::to_string(labels.size()) + " entries for " +
                    spec_name(spec));

  std::vector<BigRational> components = ricci_general(spec, metric);
  if (common.json) {
    std::cout << json_text(ricci_json(spec, metric, components, common.digits));
    return 0;
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    std::cout << "r" << labels[i] << " = " << components[i].str() << " ("
              << components[i].decimal(common.digits) << ")\n";
  return 0;
}

// ------------------------------------------------------------- groebner ----

int run_groebner(const std::string& input, const Common& common) {
  std::string text;
  if (input == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw SpecError("cannot read " + input);
    text = read_stream(in);
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  IdealInput ideal = ideal_from_json(doc);

  Budget budget = common.budget();
  GroebnerBasis gb = ideal.order.kind == MonomialOrder::Kind::Lex
                         ? lex_basis(ideal.ctx, ideal.polys, ideal.order, &budget)
                         : buchberger(ideal.ctx, ideal.polys, ideal.order, &budget);
  std::cerr << "pairs " << gb.stats.pairs_processed << ", " << budget.seconds_used()
            << "s\n";
  if (common.json) {
    std::cout << json_text(basis_json(gb));
    return 0;
  }
  std::cout << "# " << gb.order.kind_name() << " basis, " << gb.elems.size()
            << " elements\n";
  PolyFile file{gb.ctx, gb.elems};
  std::cout << poly_file_to_text(file);
  return 0;
}

// ---------------------------------------------------------------- roots ----

int run_roots(const std::string& path, bool positive, const std::string& width_text,
              const Common& common) {
  PolyFile file = read_poly_file(path);
  if (file.polys.size() != 1)
    throw SpecError(path + ": expected exactly one polynomial");
  std::size_t var = 0;
  bool found = false;
  const MultiPoly& poly = file.polys.front();
  for (std::size_t v = 0; v < file.ctx->arity(); ++v) {
    bool used = false;
    for (const auto& term : poly.terms())
      if (term.m.exps.size() > v && term.m.exps[v] > 0) used = true;
    if (!used) continue;
    if (found) throw SpecError(path + ": polynomial is not univariate");
    var = v;
    found = true;
  }
  UniPoly f = UniPoly::from_multi(poly, var);

  Budget budget = common.budget();
  IsolationOptions opts;
  opts.positive_only = positive;
  opts.target_width = BigRational(width_text);
  if (opts.target_width.sign() <= 0) throw SpecError("--width must be positive");
  opts.budget = &budget;
  std::vector<IsolatingInterval> roots = isolate_real_roots(f, opts);

  std::string name = found ? file.ctx->name(var) : "x";
  if (common.json) {
    std::cout << json_text(roots_json(name, f, roots, common.digits));
    return 0;
  }
  std::cout << roots.size() << (positive ? " positive" : " real") << " roots of degree-"
            << f.degree() << " polynomial in " << name << "\n";
  for (const IsolatingInterval& iv : roots) {
    BigRational mid = iv.exact ? *iv.exact : (iv.lo + iv.hi) / BigRational(2);
    std::cout << mid.decimal(common.digits) << "  in (" << iv.lo.str() << ", "
              << iv.hi.str() << "]";
    if (iv.exact) std::cout << " exact " << iv.exact->str();
    std::cout << "\n";
  }
  return 0;
}

// ----------------------------------------------------- verify-theorem-b ----

struct ClaimList {
  Json claims = Json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    Json c;
    c["claim"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    claims.push_back(std::move(c));
    all_pass = all_pass && pass;
  }
};

void point_claims(const TheoremBData& data, long n, long p, Budget* budget, ClaimList& list) {
  std::string at = "(" + std::to_string(n) + "," + std::to_string(p) + ")";
  EndpointSigns es = endpoint_signs(data, n, p);
  list.add("U1(0) > 0 at " + at, es.at0 > 0);
  list.add("U1(1) > 0 at " + at, es.at1 > 0);
  if (4 * p <= 3 * n) list.add("U1(1/5) < 0 at " + at, es.at_fifth < 0);
  if (p < n) list.add("U2 signs alternate at " + at, u2_sign_pattern(data, n, p));
  if (p >= 2 && 4 * p <= 3 * n)
    list.add("b_j signs alternate at " + at, b_sign_pattern(data, n, p));
  if (p >= 2 && p < n)
    list.add("u1-eliminant is a positive multiple of U1 at " + at,
             verify_u1_against_groebner(data, n, p, budget));
}

int run_verify(std::optional<long> n, std::optional<long> p, std::optional<long> grid,
               const Common& common) {
  if (n.has_value() != p.has_value())
    throw SpecError("--n and --p must be given together");
  if (n && grid) throw SpecError("--grid excludes --n/--p");
  TheoremBData data = TheoremBData::load();
  Budget budget = common.budget();
  ClaimList list;

  if (n) {
    point_claims(data, *n, *p, &budget, list);
  } else {
    long n_max = grid.value_or(40);
    if (n_max < 3) throw SpecError("--grid must be at least 3");

    IdentityReport ids = u1_identities(data);
    list.add("U1(0) equals the printed square product", ids.at0);
    list.add("U1(1) equals the first printed factorization", ids.at1_first);
    list.add("U1(1) equals the grouped factorization", ids.at1_second);
    list.add("-(390625/64) U1(1/5) equals u(n, p)", ids.fifth);
    list.add("u(m + 4p/3, p) equals the printed expansion", ids.expansion);

    ExpansionReport exp = u_expansion_certificate(data);
    for (const CoefficientCertificate& c : exp.coefficients)
      list.add("expansion coefficient of m^" + std::to_string(c.power) +
                   " positive for p >= 1",
               c.positive, c.method);

    for (auto [vn, vp] : {std::pair<long, long>{3, 2}, {4, 2}, {4, 3}, {5, 3}})
      list.add("u1-eliminant is a positive multiple of U1 at (" + std::to_string(vn) +
                   "," + std::to_string(vp) + ")",
               verify_u1_against_groebner(data, vn, vp, &budget));

    bool endpoints = true, u2 = true, b = true;
    long points = 0;
    for (long vn = 3; vn <= n_max; ++vn)
      for (long vp = 2; 4 * vp <= 3 * vn; ++vp) {
        ++points;
        EndpointSigns es = endpoint_signs(data, vn, vp);
        endpoints = endpoints && es.at0 > 0 && es.at1 > 0 && es.at_fifth < 0;
        u2 = u2 && u2_sign_pattern(data, vn, vp);
        b = b && b_sign_pattern(data, vn, vp);
      }
    std::string where = " on all " + std::to_string(points) + " grid points, n <= " +
                        std::to_string(n_max);
    list.add("endpoint signs are (+, +, -)" + where, endpoints);
    list.add("U2 signs alternate" + where, u2);
    list.add("b_j signs alternate" + where, b);
  }

  if (common.json) {
    Json j;
    j["all_pass"] = list.all_pass;
    j["claims"] = std::move(list.claims);
    std::cout << json_text(j);
  } else {
    for (const Json& c : list.claims) {
      std::cout << (c.at("pass").get<bool>() ? "PASS " : "FAIL ")
                << c.at("claim").get<std::string>();
      if (c.contains("detail")) std::cout << " [" << c.at("detail").get<std::string>() << "]";
      std::cout << "\n";
    }
    std::cout << (list.all_pass ? "all claims hold\n" : "CLAIMS FAILED\n");
  }
  return list.all_pass ? 0 : 3;
}

// --------------------------------------------------------------- census ----

int run_census(const std::string& family, long n_max, const Common& common) {
  Budget budget = common.budget();
  SolveOptions opts;
  opts.tol = common.tolerance();
  opts.budget = &budget;
  std::vector<CensusRow> rows = census(family, n_max, opts);

  if (common.json) {
    std::cout << json_text(census_json(family, rows));
    return 0;
  }
  std::cout << "family " << family << "\n";
  std::cout << "   n  jensen  adn  new  complete  conj_jensen  conj_new\n";
  for (const CensusRow& row : rows) {
    std::string cj = row.conjectured_jensen ? std::to_string(*row.conjectured_jensen) : "-";
    std::string cn = row.conjectured_new ? std::to_string(*row.conjectured_new) : "-";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%4ld  %6ld  %3ld  %3ld  %8s  %11s  %8s\n", row.n,
                  row.jensen, row.adn, row.new_metrics, row.complete ? "yes" : "no",
                  cj.c_str(), cn.c_str());
    std::cout << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein metrics on Sp(n)/Sp(n-p): exact systems, certified solutions,"
               " sign certificates"};
  app.require_subcommand(1);

  SpecFlags solve_spec, system_spec, ricci_spec;
  Common solve_common, system_common, ricci_common, gb_common, roots_common,
      verify_common, census_common;
  std::string metric, gb_input = "-", roots_poly, roots_width = "1e-6";
  bool roots_positive = false;
  long verify_n = -1, verify_p = -1, verify_grid = -1;
  std::string census_family;
  long census_n_max = 0;

  CLI::App* solve = app.add_subcommand("solve", "solve the Einstein system");
  add_spec_flags(solve, solve_spec);
  add_common(solve, solve_common, true);

  CLI::App* system = app.add_subcommand("system", "print the assembled polynomial system");
  add_spec_flags(system, system_spec);
  add_common(system, system_common);

  CLI::App* ricci = app.add_subcommand("ricci", "evaluate Ricci components at a metric");
  add_spec_flags(ricci, ricci_spec);
  ricci->add_option("--metric", metric, "comma-separated positive rationals")->required();
  add_common(ricci, ricci_common);

  CLI::App* groebner =
      app.add_subcommand("groebner", "reduced Groebner basis of an ideal document");
  groebner->add_option("--input", gb_input, "JSON file, - for stdin");
  add_common(groebner, gb_common);

  CLI::App* roots = app.add_subcommand("roots", "isolate real roots of a polynomial file");
  roots->add_option("--poly", roots_poly, "polynomial file")->required();
  roots->add_flag("--positive", roots_positive, "positive roots only");
  roots->add_option("--width", roots_width, "target interval width");
  add_common(roots, roots_common);

  CLI::App* verify =
      app.add_subcommand("verify-theorem-b", "machine-check the sign certificates");
  verify->add_option("--n", verify_n, "check claims at one n (with --p)");
  verify->add_option("--p", verify_p, "check claims at one p (with --n)");
  verify->add_option("--grid", verify_grid, "grid bound on n (default 40)");
  add_common(verify, verify_common);

  CLI::App* census_cmd = app.add_subcommand("census", "count metrics per family row");
  census_cmd->add_option("--family", census_family, "n-2,1,1 or n-3,1,2")->required();
  census_cmd->add_option("--n-max", census_n_max, "last n of the census")->required();
  add_common(census_cmd, census_common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(solve_spec, solve_common);
    if (system->parsed()) return run_system(system_spec, system_common);
    if (ricci->parsed()) return run_ricci(ricci_spec, metric, ricci_common);
    if (groebner->parsed()) return run_groebner(gb_input, gb_common);
    if (roots->parsed())
      return run_roots(roots_poly, roots_positive, roots_width, roots_common);
    if (verify->parsed())
      return run_verify(verify_n < 0 ? std::nullopt : std::optional<long>(verify_n),
                        verify_p < 0 ? std::nullopt : std::optional<long>(verify_p),
                        verify_grid < 0 ? std::nullopt : std::optional<long>(verify_grid),
                        verify_common);
    if (census_cmd->parsed()) return run_census(census_family, census_n_max, census_common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
