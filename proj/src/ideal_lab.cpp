#include "sra/ideal_lab.hpp"

#include <cstdlib>
#include <future>
#include <thread>

namespace sra {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::BruteForce: return "brute-force";
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::BothAgree: return "both-agree";
  }
  return "?";
}

int thread_limit() {
  if (const char* env = std::getenv("SRA_TRACE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// Moments

namespace {

std::optional<GenFunSet> closed_form_for(const KappaTrace& sp) {
  const Rational mu = sp.mu();
  if (mu.get_den() != 1) return std::nullopt;
  if (mu.get_num() % sp.n == 0) return std::nullopt;
  return solve_Gk(sp);
}

}  // namespace

MomentTable build_moment_table(const KappaTrace& sp, int S, const MomentOptions& opt) {
  if (S < 0) throw ConfigError("moment order must be nonnegative");
  const int n = sp.n;
  MomentTable mt;
  mt.n = n;
  mt.kappa = sp.kappa;
  mt.m.assign(n, std::vector<Cyclo>(S + 1));
  mt.provenance.assign(n, std::vector<Provenance>(S + 1, Provenance::BruteForce));

  std::optional<GenFunSet> gf;
  if (opt.closed_form) gf = closed_form_for(sp);
  const int bf_max = std::min(S, opt.brute_force_cap);
  if (!gf && bf_max < S)
    throw ConfigError("moments beyond s = " + std::to_string(bf_max) +
                      " need a closed form (degenerate mu) or a higher brute-force cap");

  std::vector<std::vector<Cyclo>> closed(n);
  if (gf)
    for (int p = 0; p < n; ++p) closed[p] = singlet_moments(*gf, p, S);

  std::vector<std::vector<Cyclo>> brute(n);
  Cyclo l0_brute;
  if (bf_max >= 0 && opt.brute_force_cap >= 0) {
    TraceEvaluator ev(sp, 2 * bf_max, opt.slack);
    Algebra& alg = ev.engine().algebra();
    const RElement& core = alg.singlet_core();
    const Cyclo scale = alg.singlet_scale();
    l0_brute = ev(alg.group_element({LQ::Kind::L, 0}));
    for (int p = 0; p < n; ++p) {
      RElement pw = alg.group_element({LQ::Kind::Q, p});
      Cyclo sc(1);
      for (int s = 0; s <= bf_max; ++s) {
        brute[p].push_back(ev(pw) * sc);
        if (s < bf_max) {
          pw = alg.mul(core, pw);
          sc *= scale;
        }
      }
    }
  }

  const Cyclo l0_closed = group_values(sp).L[0];
  if (!brute[0].empty() && l0_brute != l0_closed)
    throw MomentMismatch(0, -1, "sp(L_0): brute force " + to_string(l0_brute) + " vs closed form " +
                                    to_string(l0_closed));
  mt.l0 = l0_closed;

  for (int p = 0; p < n; ++p)
    for (int s = 0; s <= S; ++s) {
      const bool has_b = s < static_cast<int>(brute[p].size());
      const bool has_c = gf.has_value();
      if (has_b && has_c) {
        if (brute[p][s] != closed[p][s])
          throw MomentMismatch(p, s, "m[" + std::to_string(p) + "][" + std::to_string(s) + "]: brute force " +
                                         to_string(brute[p][s]) + " vs closed form " + to_string(closed[p][s]));
        mt.m[p][s] = brute[p][s];
        mt.provenance[p][s] = Provenance::BothAgree;
      } else if (has_b) {
        mt.m[p][s] = brute[p][s];
        mt.provenance[p][s] = Provenance::BruteForce;
      } else {
        mt.m[p][s] = closed[p][s];
        mt.provenance[p][s] = Provenance::ClosedForm;
      }
    }
  return mt;
}

// ---------------------------------------------------------------------------
// Gram

int H0Gram::index(LQ g, int j) const {
  if (j < 0 || j > J) throw ConfigError("power outside the truncation");
  return (g.kind == LQ::Kind::L ? n * (J + 1) : 0) + mod_n(g.p, n) * (J + 1) + j;
}

H0Index H0Gram::at(int i) const {
  const int block = J + 1;
  const bool is_l = i >= n * block;
  const int r = is_l ? i - n * block : i;
  return {{is_l ? LQ::Kind::L : LQ::Kind::Q, r / block}, r % block};
}

H0Gram build_gram(const MomentTable& mt, int J) {
  if (J < 0) throw ConfigError("truncation J must be nonnegative");
  if (mt.max_power() < 2 * J)
    throw ConfigError("Gram at J = " + std::to_string(J) + " needs moments up to " + std::to_string(2 * J));
  H0Gram g;
  g.n = mt.n;
  g.J = J;
  const int N = g.size();
  g.B = Matrix<Cyclo>::Constant(N, N, Cyclo());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const H0Index x = g.at(a), y = g.at(b);
      const int s = x.j + y.j;
      const int p = x.g.p, q = y.g.p;
      const bool xq = x.g.kind == LQ::Kind::Q, yq = y.g.kind == LQ::Kind::Q;
      Cyclo v;
      if (xq && yq) {
        if (p == q) v = mt.m[q][s];
      } else if (!xq && !yq) {
        if (mod_n(p + q, g.n) == 0) v = (y.j % 2 == 0) ? mt.m[q][s] : -mt.m[q][s];
      } else if (s == 0 && p == 0 && q == 0) {
        v = mt.l0;
      }
      g.B(a, b) = v;
    }
  return g;
}

Eigen::Index rank_of(const H0Gram& gram, const std::vector<int>& rows) {
  Matrix<Cyclo> sub(static_cast<Eigen::Index>(rows.size()), gram.B.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) sub.row(r) = gram.B.row(rows[r]);
  return rank(sub);
}

Poly<Cyclo> minimal_annihilator(const H0Gram& gram, LQ g0) {
  const Eigen::Index N = gram.B.rows();
  Eigen::Index prev_rank = 0;
  for (int d = 0; d < gram.J; ++d) {
    Matrix<Cyclo> cols(N, d + 1);
    for (int i = 0; i <= d; ++i) cols.col(i) = gram.B.col(gram.index(g0, i));
    const Eigen::Index r = rank(cols);
    if (r == prev_rank) {
      const Matrix<Cyclo> ker = nullspace(cols);
      for (Eigen::Index k = 0; k < ker.cols(); ++k) {
        if (ker(d, k).is_zero()) continue;
        std::vector<Cyclo> c(d + 1);
        for (int i = 0; i <= d; ++i) c[i] = ker(i, k);
        return Poly<Cyclo>(std::move(c)).monic();
      }
      throw InternalError("annihilator kernel vector without leading term");
    }
    prev_rank = r;
  }
  throw InsufficientTruncation("annihilator of " + to_string(g0) + " not found below degree J = " +
                               std::to_string(gram.J) + "; increase J");
}

Poly<Cyclo> predicted_annihilator(const GenFunSet& g, int p) {
  const FieldContext F(g.n);
  const Cyclo i = F.i();
  Poly<Cyclo> phi = Poly<Cyclo>::constant(Cyclo(1));
  if (mod_n(p, g.n) != 0) {
    for (int l = -g.mu; l <= g.mu; ++l)
      if (!g.alpha(p, l).is_zero()) phi = phi * Poly<Cyclo>::linear(i * Cyclo(l));
    return phi;
  }
  phi = Poly<Cyclo>::monomial(1);
  for (int l = 0; l < g.mu; ++l)
    if (!g.alpha(0, l).is_zero())
      phi = phi * Poly<Cyclo>(std::vector<Cyclo>{Cyclo(static_cast<long>(l) * l - static_cast<long>(g.mu) * g.mu),
                                                 Cyclo(), Cyclo(1)});
  return phi;
}

// ---------------------------------------------------------------------------
// Kernel

H0Element H0Element::from_poly(const Poly<Cyclo>& f, LQ g) {
  H0Element e;
  for (int j = 0; j <= f.degree(); ++j)
    if (!f[j].is_zero()) e.terms.push_back({{g, j}, f[j]});
  return e;
}

bool kernel_membership(const H0Gram& gram, const H0Element& x) {
  std::vector<std::pair<int, Cyclo>> v;
  for (const auto& [idx, c] : x.terms) {
    if (idx.j > gram.J) throw ConfigError("element exceeds the Gram truncation");
    v.emplace_back(gram.index(idx.g, idx.j), c);
  }
  for (Eigen::Index r = 0; r < gram.B.rows(); ++r) {
    Cyclo acc;
    for (const auto& [col, c] : v) acc += gram.B(r, col) * c;
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<Witness> nonzero_ideal_witness(const H0Gram& gram, const std::vector<Poly<Cyclo>>& phis) {
  auto column_nonzero = [&](int c) {
    for (Eigen::Index r = 0; r < gram.B.rows(); ++r)
      if (!gram.B(r, c).is_zero()) return true;
    return false;
  };
  int fallback = -1;
  for (int c = 0; c < gram.size() && fallback < 0; ++c)
    if (column_nonzero(c)) fallback = c;

  std::vector<Witness> out;
  for (int p = 0; p < gram.n; ++p) {
    Witness w;
    w.p = p;
    w.phi = phis.at(p);
    w.phi_in_kernel = !w.phi.is_zero() && kernel_membership(gram, H0Element::from_poly(w.phi, {LQ::Kind::Q, p}));
    int pick = -1;
    for (int j = 0; j <= gram.J && pick < 0; ++j)
      if (column_nonzero(gram.index({LQ::Kind::Q, p}, j))) pick = gram.index({LQ::Kind::Q, p}, j);
    if (pick < 0) pick = fallback;
    if (pick >= 0) {
      w.non_member = gram.at(pick);
      w.non_member_pairs = true;
    }
    out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coincidence

int default_truncation(int, long z) { return 2 * static_cast<int>(std::labs(z)) + 3; }

bool AnnihilatorCertificate::all_hold() const {
  if (!verdict_equal() || !coefficients_coincide || !unit_outside_kernel) return false;
  for (const auto& e : entries)
    if (!e.matches_prediction || !e.q_equals_l) return false;
  for (const auto* ws : {&witnesses_plus, &witnesses_minus})
    for (const auto& w : *ws)
      if (!w.phi_in_kernel || !w.non_member_pairs) return false;
  return true;
}

AnnihilatorCertificate coincide(int n, long z, int J, const CoincideOptions& opt) {
  require_odd_n(n);
  if (z % n == 0) throw ConfigError("z must lie outside nZ");
  if (J < 1) throw ConfigError("truncation J must be positive");
  const KappaTrace plus = degenerate_values(n, {DegenerateFamily::Kind::TraceZ, z, opt.tau});
  const KappaTrace minus = degenerate_values(n, {DegenerateFamily::Kind::SuperTraceZ, z, opt.tau});

  MomentTable mt_plus, mt_minus;
  if (thread_limit() >= 2) {
    auto fut = std::async(std::launch::async, [&] { return build_moment_table(minus, 2 * J, opt.moments); });
    mt_plus = build_moment_table(plus, 2 * J, opt.moments);
    mt_minus = fut.get();
  } else {
    mt_plus = build_moment_table(plus, 2 * J, opt.moments);
    mt_minus = build_moment_table(minus, 2 * J, opt.moments);
  }
  const GenFunSet gf_plus = solve_Gk(plus), gf_minus = solve_Gk(minus);
  const H0Gram g_plus = build_gram(mt_plus, J), g_minus = build_gram(mt_minus, J);

  AnnihilatorCertificate cert;
  cert.n = n;
  cert.z = z;
  cert.J = J;
  cert.tau = opt.tau;
  cert.coefficients_coincide = same_coefficients(gf_plus, gf_minus);
  for (const auto* mt : {&mt_plus, &mt_minus})
    for (const auto& row : mt->provenance)
      for (Provenance pv : row) ++cert.provenance_counts[static_cast<int>(pv)];

  std::vector<Poly<Cyclo>> phis_plus, phis_minus;
  for (int p = 0; p < n; ++p) {
    AnnihilatorEntry e;
    e.p = p;
    e.phi_plus = minimal_annihilator(g_plus, {LQ::Kind::Q, p});
    e.phi_minus = minimal_annihilator(g_minus, {LQ::Kind::Q, p});
    e.phi_L_plus = minimal_annihilator(g_plus, {LQ::Kind::L, mod_n(-p, n)});
    e.phi_L_minus = minimal_annihilator(g_minus, {LQ::Kind::L, mod_n(-p, n)});
    e.predicted_plus = predicted_annihilator(gf_plus, p);
    e.predicted_minus = predicted_annihilator(gf_minus, p);
    e.equal = e.phi_plus == e.phi_minus;
    e.matches_prediction = e.phi_plus == e.predicted_plus && e.phi_minus == e.predicted_minus;
    e.q_equals_l = e.phi_plus == e.phi_L_plus && e.phi_minus == e.phi_L_minus;
    if (!e.equal && !cert.first_mismatch) cert.first_mismatch = p;
    phis_plus.push_back(e.phi_plus);
    phis_minus.push_back(e.phi_minus);
    cert.entries.push_back(std::move(e));
  }
  cert.witnesses_plus = nonzero_ideal_witness(g_plus, phis_plus);
  cert.witnesses_minus = nonzero_ideal_witness(g_minus, phis_minus);

  H0Element unit;
  for (int p = 0; p < n; ++p) unit.terms.push_back({{{LQ::Kind::Q, p}, 0}, Cyclo(1)});
  cert.unit_outside_kernel = !kernel_membership(g_plus, unit) && !kernel_membership(g_minus, unit);
  return cert;
}

}  // namespace sra
