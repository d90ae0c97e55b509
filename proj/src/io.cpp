#include "sra/io.hpp"

#include <cstdio>

namespace sra {

json to_json(const Cyclo& c, int order) {
  if (c.order() != 0 && c.order() != order) throw ConfigError("number belongs to a different cyclotomic field");
  const int deg = CycloField::get(order)->degree();
  json coeffs = json::array();
  for (int i = 0; i < deg; ++i) coeffs.push_back(to_string(c.coeff(i)));
  return {{"order", order}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json& j) {
  if (j.is_string()) return Cyclo(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Cyclo(j.get<long>());
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ConfigError("expected {\"order\", \"coeffs\"} for a cyclotomic number");
  const int order = j.at("order").get<int>();
  const auto field = CycloField::get(order);
  const auto& cs = j.at("coeffs");
  if (!cs.is_array() || static_cast<int>(cs.size()) > field->degree())
    throw ConfigError("coefficient list longer than the field degree");
  Cyclo v;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Rational q = parse_rational(cs[i].get<std::string>());
    if (sgn(q) != 0) v += Cyclo::root(field, static_cast<long>(i)) * q;
  }
  return v;
}

json to_json(const GroupAlgebraElement& e) {
  const int order = e.context().order();
  json terms = json::array();
  for (const auto& [g, c] : e.terms()) terms.push_back({{"g", to_string(g)}, {"c", to_json(c, order)}});
  return {{"basis", "LQ"}, {"n", e.context().n()}, {"terms", terms}};
}

GroupAlgebraElement group_element_from_json(const FieldContext& ctx, const json& j) {
  if (j.value("basis", "") != "LQ") throw ConfigError("group algebra element must use the LQ basis tag");
  if (j.value("n", ctx.n()) != ctx.n()) throw ConfigError("group algebra element has a different n");
  GroupAlgebraElement e(ctx);
  for (const auto& t : j.at("terms")) {
    const std::string g = t.at("g").get<std::string>();
    if (g.size() < 2 || (g[0] != 'L' && g[0] != 'Q')) throw ConfigError("bad group basis label '" + g + "'");
    e.add({g[0] == 'L' ? LQ::Kind::L : LQ::Kind::Q, std::stoi(g.substr(1))}, cyclo_from_json(t.at("c")));
  }
  return e;
}

json to_json(const Poly<Cyclo>& f, int order) {
  json cs = json::array();
  for (const auto& c : f.coeffs()) cs.push_back(to_json(c, order));
  return {{"coeffs_low_first", cs}, {"degree", f.degree()}, {"text", f.str()}};
}

Poly<Cyclo> poly_from_json(const json& j) {
  std::vector<Cyclo> cs;
  for (const auto& c : j.at("coeffs_low_first")) cs.push_back(cyclo_from_json(c));
  return Poly<Cyclo>(std::move(cs));
}

json to_json(const LaurentPoly& f, int order) {
  json out = json::object();
  for (const auto& [e, c] : f.terms()) out[std::to_string(e)] = to_json(c, order);
  return out;
}

json to_json(const KappaTrace& sp) {
  const int order = 4 * sp.n;
  json params = json::array();
  for (const auto& p : sp.params) params.push_back(to_json(p, order));
  return {{"n", sp.n}, {"nu", to_string(sp.nu)}, {"mu", to_string(sp.mu())}, {"kappa", sp.kappa},
          {"params", params}};
}

json to_json(const GroupValues& gv, int n) {
  const int order = 4 * n;
  auto list = [&](const std::vector<Cyclo>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(to_json(c, order));
    return a;
  };
  return {{"x_or_y", to_json(gv.x_or_y, order)}, {"R", list(gv.R)}, {"S", list(gv.S)}, {"L", list(gv.L)},
          {"Q", list(gv.Q)}};
}

json to_json(const GenFunSet& g) {
  const int order = 4 * g.n;
  json G = json::array(), F = json::array(), alpha = json::array(), beta = json::array();
  for (int k = 0; k < g.n; ++k) {
    G.push_back(to_json(g.G[k], order));
    F.push_back(to_json(g.F[k], order));
    json a = json::object(), b = json::object();
    for (int l = -g.mu; l <= g.mu; ++l) {
      if (!g.alpha(k, l).is_zero()) a[std::to_string(l)] = to_json(g.alpha(k, l), order);
      if (!g.beta(k, l).is_zero()) b[std::to_string(l)] = to_json(g.beta(k, l), order);
    }
    alpha.push_back(a);
    beta.push_back(b);
  }
  return {{"n", g.n}, {"mu", g.mu}, {"kappa", g.kappa}, {"mu_folded", g.folded}, {"tau", to_json(g.tau, order)},
          {"sp_L0", to_json(g.sp_L0, order)}, {"G", G}, {"F", F}, {"alpha", alpha}, {"beta", beta}};
}

json to_json(const MomentTable& mt) {
  const int order = 4 * mt.n;
  json rows = json::array();
  for (int p = 0; p < mt.n; ++p) {
    json r = json::array();
    for (std::size_t s = 0; s < mt.m[p].size(); ++s)
      r.push_back({{"s", s}, {"value", to_json(mt.m[p][s], order)}, {"provenance", to_string(mt.provenance[p][s])}});
    rows.push_back({{"p", p}, {"moments", r}});
  }
  return {{"n", mt.n}, {"kappa", mt.kappa}, {"sp_L0", to_json(mt.l0, order)}, {"m", rows}};
}

json to_json(const AnnihilatorCertificate& c) {
  const int order = 4 * c.n;
  json per_p = json::array();
  for (const auto& e : c.entries)
    per_p.push_back({{"p", e.p},
                     {"phi_plus", to_json(e.phi_plus, order)},
                     {"phi_minus", to_json(e.phi_minus, order)},
                     {"phi_L_plus", to_json(e.phi_L_plus, order)},
                     {"phi_L_minus", to_json(e.phi_L_minus, order)},
                     {"predicted", to_json(e.predicted_plus, order)},
                     {"equal", e.equal},
                     {"matches_prediction", e.matches_prediction},
                     {"q_equals_l", e.q_equals_l}});
  auto witnesses = [&](const std::vector<Witness>& ws) {
    json a = json::array();
    for (const auto& w : ws)
      a.push_back({{"p", w.p},
                   {"kernel_element", w.phi.str() + " applied to Q" + std::to_string(w.p)},
                   {"in_kernel", w.phi_in_kernel},
                   {"non_member", "s^" + std::to_string(w.non_member.j) + " " + to_string(w.non_member.g)},
                   {"non_member_pairs", w.non_member_pairs}});
    return a;
  };
  json out = {{"n", c.n},
              {"z", c.z},
              {"J", c.J},
              {"tau", to_string(c.tau)},
              {"per_p", per_p},
              {"verdict", c.verdict_equal() ? "equal" : "differ"},
              {"alpha_beta_coincide", c.coefficients_coincide},
              {"unit_outside_kernel", c.unit_outside_kernel},
              {"witnesses_plus", witnesses(c.witnesses_plus)},
              {"witnesses_minus", witnesses(c.witnesses_minus)},
              {"moment_provenance",
               {{"brute-force", c.provenance_counts[0]},
                {"closed-form", c.provenance_counts[1]},
                {"both-agree", c.provenance_counts[2]}}},
              {"all_hold", c.all_hold()}};
  if (c.first_mismatch) out["first_mismatch_p"] = *c.first_mismatch;
  return out;
}

namespace {

std::string coeff_list(const Cyclo& c, int order) {
  const int deg = CycloField::get(order)->degree();
  std::string s;
  for (int i = 0; i < deg; ++i) {
    if (i) s += ';';
    s += to_string(c.coeff(i));
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const MomentTable& mt) {
  const int order = 4 * mt.n;
  os << "kappa,p,s,value,provenance\n";
  for (int p = 0; p < mt.n; ++p)
    for (std::size_t s = 0; s < mt.m[p].size(); ++s)
      os << mt.kappa << ',' << p << ',' << s << ',' << coeff_list(mt.m[p][s], order) << ','
         << to_string(mt.provenance[p][s]) << '\n';
}

void write_csv(std::ostream& os, const H0Gram& g) {
  const int order = 4 * g.n;
  os << "row,col,value\n";
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (g.B(a, b).is_zero()) continue;
      const H0Index x = g.at(a), y = g.at(b);
      os << "s^" << x.j << ' ' << to_string(x.g) << ",s^" << y.j << ' ' << to_string(y.g) << ','
         << coeff_list(g.B(a, b), order) << '\n';
    }
}

std::string render(const Cyclo& c, bool approx) {
  std::string s = to_string(c);
  if (approx) {
    const auto [re, im] = c.approx();
    char buf[96];
    std::snprintf(buf, sizeof buf, "  [approx %.12g%+.12gi]", re, im);
    s += buf;
  }
  return s;
}

}  // namespace sra
