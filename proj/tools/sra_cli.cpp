// Command-line front end: classification, trace spaces, evaluation, moments,
// generating-function checks, Gram matrices, annihilators and the
// tr_z / str_z coincidence certificate.

#include "sra/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sra;

enum Exit { kVerified = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 3;
  std::string nu;
  long z = 0;
  bool has_z = false;
  std::string family;  // trace | supertrace | half
  std::string kappa;  // empty: both, or the one implied by --family
  int degree = -1;
  int J = -1;
  std::string tau = "1";
  std::string format = "text";
  std::string output;
  bool approx = false;
  int smax = 6;
  int bf_cap = 6;
  int slack = 2;
  std::string params;
  std::string expr;
  bool allow_large = false;
};

std::vector<int> kappas(const RunConfig& c) {
  if (c.kappa.empty()) {
    if (c.family == "trace") return {1};
    if (c.family == "supertrace" || c.family == "half") return {-1};
    return {1, -1};
  }
  if (c.kappa == "both") return {1, -1};
  if (c.kappa == "1" || c.kappa == "+1") return {1};
  if (c.kappa == "-1") return {-1};
  throw ConfigError("--kappa must be 1, -1 or both");
}

void check_limits(const RunConfig& c, int degree, int J) {
  if (c.allow_large) return;
  if (degree > 16) throw ResourceLimit("degree " + std::to_string(degree) + " exceeds 16; raise limits with --allow-large");
  if (J > 16) throw ResourceLimit("J = " + std::to_string(J) + " exceeds 16; raise limits with --allow-large");
  if (c.n > 15) throw ResourceLimit("n = " + std::to_string(c.n) + " exceeds 15; raise limits with --allow-large");
}

Rational nu_of(const RunConfig& c) {
  if (!c.nu.empty()) return parse_rational(c.nu);
  if (c.has_z) {
    DegenerateFamily f{c.family == "half" ? DegenerateFamily::Kind::SuperTraceHalf : DegenerateFamily::Kind::TraceZ,
                       c.z};
    return f.nu(c.n);
  }
  return Rational(1, 4);
}

/// The kappa-trace selected by the flags: a degenerate family when --z is
/// given (kappa picks tr_z or str_z unless --family says otherwise), else
/// the generic functional with parameters --params (default all 1).
KappaTrace trace_of(const RunConfig& c, int kappa) {
  if (c.has_z) {
    DegenerateFamily::Kind kind = kappa == 1 ? DegenerateFamily::Kind::TraceZ : DegenerateFamily::Kind::SuperTraceZ;
    if (c.family == "half") {
      if (kappa != -1) throw ConfigError("the str_1/2 family is a supertrace; use --kappa -1");
      kind = DegenerateFamily::Kind::SuperTraceHalf;
    } else if (c.family == "trace" && kappa != 1) {
      throw ConfigError("--family trace requires --kappa 1");
    } else if (c.family == "supertrace" && kappa != -1) {
      throw ConfigError("--family supertrace requires --kappa -1");
    }
    return degenerate_values(c.n, {kind, c.z, parse_rational(c.tau)});
  }
  KappaTrace sp{c.n, nu_of(c), kappa, {}};
  const int np = expected_trace_dimension(c.n, kappa);
  const FieldContext F(c.n);
  if (c.params.empty()) {
    sp.params.assign(np, F.embed(1));
  } else {
    std::stringstream ss(c.params);
    std::string item;
    while (std::getline(ss, item, ',')) sp.params.push_back(F.embed(parse_rational(item)));
    if (static_cast<int>(sp.params.size()) != np)
      throw ConfigError("--params needs " + std::to_string(np) + " values for kappa = " + std::to_string(kappa));
  }
  return sp;
}

std::string family_label(const RunConfig& c, int kappa) {
  if (!c.has_z) return kappa == 1 ? "trace" : "supertrace";
  if (c.family == "half") return "str_1/2(z=" + std::to_string(c.z) + ")";
  return std::string(kappa == 1 ? "tr_" : "str_") + std::to_string(c.z);
}

struct Output {
  std::ostream& os;
  const RunConfig& cfg;
  json doc = json::object();
  std::ostringstream text;
};

void emit(Output& out) {
  if (out.cfg.format == "json") out.os << out.doc.dump(2) << "\n";
  else out.os << out.text.str();
}

// ---------------------------------------------------------------------------

int cmd_classify(const RunConfig& c, Output& out) {
  const Rational nu = nu_of(c);
  const NuClass cls = classify_nu(c.n, nu);
  const Rational tau = parse_rational(c.tau);
  out.doc = {{"n", c.n}, {"nu", to_string(nu)}, {"classification", to_string(cls)}};
  out.text << "n = " << c.n << ", nu = " << to_string(nu) << ": " << to_string(cls) << "\n";
  std::vector<DegenerateFamily> fams;
  if (cls.trace_z) {
    fams.push_back({DegenerateFamily::Kind::TraceZ, cls.z, tau});
    fams.push_back({DegenerateFamily::Kind::SuperTraceZ, cls.z, tau});
  }
  if (cls.supertrace_half) fams.push_back({DegenerateFamily::Kind::SuperTraceHalf, cls.z, tau});
  json tables = json::array();
  for (const auto& f : fams) {
    const KappaTrace sp = degenerate_values(c.n, f);
    json vals = json::array();
    out.text << "  " << to_string(f.kind) << " (z = " << f.z << ", tau = " << to_string(tau) << ", kappa = " << sp.kappa
             << ")\n";
    for (int k = 0; k < c.n; ++k) {
      const Cyclo v = sp.s_value(k);
      vals.push_back({{"k", k}, {"value", to_json(v, 4 * c.n)}});
      out.text << "    sp(S_" << k << ") = " << render(v, c.approx) << "\n";
    }
    tables.push_back({{"family", to_string(f.kind)}, {"z", f.z}, {"kappa", sp.kappa}, {"S", vals}});
  }
  out.doc["families"] = tables;
  emit(out);
  return kVerified;
}

int cmd_trace_dim(const RunConfig& c, Output& out) {
  const int D = c.degree < 0 ? 6 : c.degree;
  check_limits(c, D, 0);
  const Rational nu = nu_of(c);
  bool ok = true;
  json rows = json::array();
  for (int kappa : kappas(c)) {
    TraceEngine eng(c.n, nu, kappa, D, c.slack);
    const auto basis = eng.trace_space_basis();
    const int expected = expected_trace_dimension(c.n, kappa);
    const bool good = static_cast<int>(basis.size()) == expected;
    ok &= good;
    json words = json::array();
    for (const auto& w : basis) words.push_back(to_string(w));
    rows.push_back({{"kappa", kappa}, {"dimension", basis.size()}, {"expected", expected}, {"free_words", words},
                    {"relation_rows", eng.rows_processed()}, {"match", good}});
    out.text << "kappa = " << kappa << ": dimension " << basis.size() << " (expected " << expected << ") "
             << (good ? "OK" : "MISMATCH") << "\n";
  }
  out.doc = {{"n", c.n}, {"nu", to_string(nu)}, {"degree", D}, {"slack", c.slack}, {"spaces", rows}};
  emit(out);
  return ok ? kVerified : kMismatch;
}

int cmd_eval(const RunConfig& c, Output& out) {
  if (c.expr.empty()) throw ConfigError("eval needs --expr");
  json rows = json::array();
  for (int kappa : kappas(c)) {
    const KappaTrace sp = trace_of(c, kappa);
    Algebra probe(c.n, sp.nu);
    const CElement x = parse_element(probe, c.expr);
    const int D = std::max(c.degree, std::max(x.degree(), 0));
    check_limits(c, D, 0);
    TraceEvaluator ev(sp, D, c.slack);
    const Cyclo v = ev(parse_element(ev.engine().algebra(), c.expr));
    rows.push_back({{"kappa", kappa}, {"functional", family_label(c, kappa)}, {"value", to_json(v, 4 * c.n)}});
    out.text << family_label(c, kappa) << "(" << c.expr << ") = " << render(v, c.approx) << "\n";
  }
  out.doc = {{"n", c.n}, {"expr", c.expr}, {"results", rows}};
  emit(out);
  return kVerified;
}

MomentOptions moment_options(const RunConfig& c) {
  MomentOptions o;
  o.brute_force_cap = c.bf_cap;
  o.slack = c.slack;
  return o;
}

int cmd_moments(const RunConfig& c, Output& out) {
  check_limits(c, 2 * std::min(c.smax, c.bf_cap), 0);
  json tables = json::array();
  std::ostringstream csv;
  bool header = true;
  for (int kappa : kappas(c)) {
    const KappaTrace sp = trace_of(c, kappa);
    const MomentTable mt = build_moment_table(sp, c.smax, moment_options(c));
    tables.push_back(to_json(mt));
    std::ostringstream one;
    write_csv(one, mt);
    std::string body = one.str();
    if (!header) body = body.substr(body.find('\n') + 1);
    header = false;
    csv << body;
    out.text << family_label(c, kappa) << ": sp(L_0) = " << render(mt.l0, c.approx) << "\n";
    for (int p = 0; p < c.n; ++p) {
      out.text << "  p = " << p << ":";
      for (int s = 0; s <= c.smax; ++s) out.text << "  [" << s << "] " << render(mt.m[p][s], c.approx);
      out.text << "\n";
    }
  }
  out.doc = {{"n", c.n}, {"smax", c.smax}, {"tables", tables}};
  if (c.format == "csv") out.os << csv.str();
  else emit(out);
  return kVerified;
}

int cmd_genfun_verify(const RunConfig& c, Output& out) {
  if (!c.has_z) throw ConfigError("genfun-verify needs --z");
  check_limits(c, 2 * std::min(c.smax, c.bf_cap), 0);
  bool ok = true;
  json reports = json::array();
  std::vector<GenFunSet> sets;
  auto check = [&](json& rep, const std::string& name, bool v) {
    rep["checks"][name] = v;
    out.text << "  " << (v ? "ok   " : "FAIL ") << name << "\n";
    ok &= v;
  };
  for (int kappa : kappas(c)) {
    const KappaTrace sp = trace_of(c, kappa);
    out.text << family_label(c, kappa) << "\n";
    const GenFunSet g = solve_Gk(sp);
    json rep = {{"kappa", kappa}, {"genfun", to_json(g)}};
    bool residual_zero = true;
    for (const auto& r : ode_residual(g)) residual_zero &= r.is_zero();
    check(rep, "ode residual and initial conditions", residual_zero);
    bool beta_top = true;
    const Cyclo expect = Cyclo(g.tau) * Rational(2 * g.mu, g.n);
    for (int k = 0; k < g.n; ++k) beta_top &= g.beta(k, g.mu) == expect;
    check(rep, "beta_mu^k = 2 tau mu / n", beta_top);
    check(rep, "alpha^0_mu = 2 tau mu / n", g.alpha(0, g.mu) == expect);
    bool series_ok = true;
    try {
      const SingletSeries ser = singlet_series(g);
      const auto op = even_moments_operator(g, c.smax / 2);
      for (int s = 0; 2 * s <= c.smax; ++s) series_ok &= ser.a(s) == op[s];
    } catch (const InternalError&) {
      series_ok = false;
    }
    check(rep, "alpha^0 symmetry, alpha^0_-mu = 0, alpha^0_mu - alpha^0_-mu = -sp(L_0), cosh form", series_ok);
    check(rep, "exponential-polynomial form", degeneracy_form_check(g));
    bool cross = true;
    try {
      const MomentTable mt = build_moment_table(sp, c.smax, moment_options(c));
      rep["moments"] = to_json(mt);
      for (int s = 1; s <= c.smax; s += 2) cross &= mt.m[0][s].is_zero();
      check(rep, "odd moments sp(s^(2j+1) Q_0) vanish", cross);
      cross = true;
    } catch (const MomentMismatch& e) {
      rep["mismatch"] = e.what();
      cross = false;
    }
    check(rep, "brute force = closed form for s <= " + std::to_string(std::min(c.smax, c.bf_cap)), cross);
    reports.push_back(rep);
    sets.push_back(g);
  }
  json doc = {{"n", c.n}, {"z", c.z}, {"reports", reports}};
  if (sets.size() == 2) {
    const bool same = same_coefficients(sets[0], sets[1]);
    doc["alpha_beta_kappa_independent"] = same;
    out.text << (same ? "ok   " : "FAIL ") << "alpha/beta tables coincide for kappa = +1, -1\n";
    ok &= same;
  }
  out.doc = doc;
  emit(out);
  return ok ? kVerified : kMismatch;
}

int truncation_of(const RunConfig& c) {
  if (c.J >= 0) return c.J;
  if (c.has_z && c.family != "half") return default_truncation(c.n, c.z);
  return 3;
}

int cmd_gram(const RunConfig& c, Output& out) {
  const int J = truncation_of(c);
  check_limits(c, 2 * std::min(2 * J, c.bf_cap), J);
  json rows = json::array();
  std::ostringstream csv;
  for (int kappa : kappas(c)) {
    const KappaTrace sp = trace_of(c, kappa);
    const MomentTable mt = build_moment_table(sp, 2 * J, moment_options(c));
    const H0Gram g = build_gram(mt, J);
    const auto r = rank(g.B);
    rows.push_back({{"kappa", kappa}, {"size", g.size()}, {"rank", r}, {"kernel_dimension", g.size() - r}});
    out.text << family_label(c, kappa) << ": Gram on H0 (J = " << J << ") size " << g.size() << ", rank " << r
             << ", kernel dimension " << g.size() - r << "\n";
    csv << "# kappa " << kappa << "\n";
    write_csv(csv, g);
  }
  out.doc = {{"n", c.n}, {"J", J}, {"grams", rows}};
  if (c.format == "csv") out.os << csv.str();
  else emit(out);
  return kVerified;
}

int cmd_annihilators(const RunConfig& c, Output& out) {
  const int J = truncation_of(c);
  check_limits(c, 2 * std::min(2 * J, c.bf_cap), J);
  json rows = json::array();
  bool ok = true;
  for (int kappa : kappas(c)) {
    const KappaTrace sp = trace_of(c, kappa);
    const MomentTable mt = build_moment_table(sp, 2 * J, moment_options(c));
    const H0Gram g = build_gram(mt, J);
    json per_p = json::array();
    out.text << family_label(c, kappa) << " (J = " << J << ")\n";
    for (int p = 0; p < c.n; ++p) {
      const Poly<Cyclo> q = minimal_annihilator(g, {LQ::Kind::Q, p});
      const Poly<Cyclo> l = minimal_annihilator(g, {LQ::Kind::L, mod_n(-p, c.n)});
      ok &= q == l;
      per_p.push_back({{"p", p}, {"phi_Q", to_json(q, 4 * c.n)}, {"phi_L_minus_p", to_json(l, 4 * c.n)},
                       {"equal", q == l}});
      out.text << "  p = " << p << ": phi = " << q.str() << (q == l ? "" : "   (L_{-p} route: " + l.str() + ")")
               << "\n";
    }
    rows.push_back({{"kappa", kappa}, {"annihilators", per_p}});
  }
  out.doc = {{"n", c.n}, {"J", J}, {"results", rows}};
  emit(out);
  return ok ? kVerified : kMismatch;
}

int cmd_coincide(const RunConfig& c, Output& out) {
  if (!c.has_z) throw ConfigError("coincide needs --z");
  const int J = truncation_of(c);
  check_limits(c, 2 * std::min(2 * J, c.bf_cap), J);
  CoincideOptions opt;
  opt.tau = parse_rational(c.tau);
  opt.moments = moment_options(c);
  const AnnihilatorCertificate cert = coincide(c.n, c.z, J, opt);
  out.doc = to_json(cert);
  out.text << "n = " << c.n << ", z = " << c.z << ", J = " << J << "\n";
  for (const auto& e : cert.entries)
    out.text << "  p = " << e.p << ": phi(+1) = " << e.phi_plus.str() << " | phi(-1) = " << e.phi_minus.str()
             << (e.equal ? "" : "  DIFFER") << (e.matches_prediction ? "" : "  (prediction " + e.predicted_plus.str() + ")")
             << (e.q_equals_l ? "" : "  (Q/L routes differ)") << "\n";
  out.text << "verdict: " << (cert.verdict_equal() ? "equal" : "differ") << "\n";
  out.text << "alpha/beta tables coincide: " << (cert.coefficients_coincide ? "yes" : "no") << "\n";
  out.text << "all supporting identities hold: " << (cert.all_hold() ? "yes" : "no") << "\n";
  emit(out);
  return cert.all_hold() ? kVerified : kMismatch;
}

int cmd_glc_check(const RunConfig& c, Output& out) {
  const int D = c.degree < 0 ? 2 : c.degree;
  check_limits(c, D, 0);
  bool ok = true;
  json rows = json::array();
  for (int kappa : kappas(c)) {
    const KappaTrace sp = trace_of(c, kappa);
    const GroupValues gv = group_values(sp);
    auto eng = make_trace_engine(c.n, sp.nu, kappa, D, c.slack);
    const Functional f = eng->functional(sp);
    Algebra& alg = eng->algebra();
    json checks = json::object();
    auto check = [&](const std::string& name, const Cyclo& got, const Cyclo& want) {
      const bool v = got == want;
      checks[name] = {{"engine", to_json(got, 4 * c.n)}, {"closed_form", to_json(want, 4 * c.n)}, {"equal", v}};
      out.text << "  " << (v ? "ok   " : "FAIL ") << name << ": " << render(got, c.approx) << "\n";
      ok &= v;
    };
    out.text << family_label(c, kappa) << " (nu = " << to_string(sp.nu) << ")\n";
    for (int k = 0; k < c.n; ++k)
      check("sp(R_" + std::to_string(k) + ")", eng->evaluate(f, alg.group_word({GroupWord::Kind::Reflection, k})),
            gv.R[k]);
    const Cyclo l0 = eng->evaluate(f, alg.group_element({LQ::Kind::L, 0}));
    check("sp(L_0)", l0, gv.L[0]);
    for (int p = 1; p < c.n; ++p)
      check("sp(L_" + std::to_string(p) + ")", eng->evaluate(f, alg.group_element({LQ::Kind::L, p})), Cyclo());
    const Cyclo s0 = eng->evaluate(f, alg.one());
    if (kappa == 1) {
      check("tr(S_0) = 2 nu^2 n X", s0, gv.x_or_y * Rational(sp.nu * sp.nu * 2 * c.n));
      check("tr(S_0) = -mu tr(L_0)", s0, l0 * Rational(-sp.mu()));
      check("tr(L_0) = -(2 mu / n) X", l0, gv.x_or_y * Rational(-2 * sp.mu() / c.n));
    } else {
      check("str(S_0) = u_0", s0, sp.s_value(0));
      check("str(R_k) = -2 nu Y", eng->evaluate(f, alg.group_word({GroupWord::Kind::Reflection, 1})),
            gv.x_or_y * Rational(-2 * sp.nu));
    }
    rows.push_back({{"kappa", kappa}, {"trace", to_json(sp)}, {"checks", checks}});
  }
  out.doc = {{"n", c.n}, {"degree", D}, {"results", rows}};
  emit(out);
  return ok ? kVerified : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact traces, supertraces and their kernels on H_{1,nu}(I_2(n))"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "odd n >= 3")->required();
    sub->add_option("--nu", cfg.nu, "rational nu, e.g. 1/3 (default 1/4 when neither --nu nor --z is given)");
    sub->add_option_function<long>(
        "--z", [&](const long& z) { cfg.z = z; cfg.has_z = true; }, "degenerate family index z");
    sub->add_option("--family", cfg.family, "trace | supertrace | half (with --z)")
        ->check(CLI::IsMember({"trace", "supertrace", "half"}));
    sub->add_option("--kappa", cfg.kappa, "1, -1 or both (default: both, or the one --family implies)");
    sub->add_option("--degree", cfg.degree, "degree cutoff D");
    sub->add_option("--J", cfg.J, "H0 truncation (default 2|z| + 3)");
    sub->add_option("--tau", cfg.tau, "family scale (rational, default 1)");
    sub->add_option("--format", cfg.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", cfg.output, "write to file instead of stdout");
    sub->add_flag("--approx", cfg.approx, "append decimal approximations (non-authoritative)");
    sub->add_option("--smax", cfg.smax, "highest moment order");
    sub->add_option("--bf-cap", cfg.bf_cap, "highest moment order evaluated by brute force");
    sub->add_option("--slack", cfg.slack, "commutator slack above D");
    sub->add_option("--params", cfg.params, "comma-separated s_1..s_m or u_0..u_m for generic nu");
    sub->add_flag("--allow-large", cfg.allow_large, "lift the resource limits");
  };

  using Cmd = int (*)(const RunConfig&, Output&);
  std::vector<std::pair<CLI::App*, Cmd>> cmds;
  auto add = [&](const char* name, const char* help, Cmd fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    cmds.emplace_back(sub, fn);
    return sub;
  };
  add("classify", "classify nu and print degenerate value tables", cmd_classify);
  add("trace-dim", "dimension of the kappa-trace space on H_{<=D}", cmd_trace_dim);
  add("eval", "evaluate a kappa-trace on an element", cmd_eval)->add_option("--expr", cfg.expr, "element, e.g. \"a0 b1 Q0\"");
  add("moments", "moment table sp(s^j Q_p)", cmd_moments);
  add("genfun-verify", "check the closed-form generating functions", cmd_genfun_verify);
  add("gram", "Gram matrix of B on the truncated H0", cmd_gram);
  add("annihilators", "minimal annihilators of Q_p and L_{-p}", cmd_annihilators);
  add("coincide", "compare annihilators of tr_z and str_z", cmd_coincide);
  add("glc-check", "group-algebra identities of the constructed functionals", cmd_glc_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kVerified : kUsage;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.output << "\n";
      return kUsage;
    }
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;
  Output out{os, cfg, json::object(), {}};
  try {
    if (!cfg.nu.empty() && cfg.has_z) throw ConfigError("give either --nu or --z, not both");
    if (!cfg.has_z && !cfg.family.empty()) throw ConfigError("--family needs --z");
    require_odd_n(cfg.n);
    for (const auto& [sub, fn] : cmds)
      if (sub->parsed()) return fn(cfg, out);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InsufficientSlack& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InsufficientTruncation& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const MomentMismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const InternalError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const ArithmeticError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
