#include "sra/ideal_lab.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace sra;

namespace {

using K = DegenerateFamily::Kind;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

const std::pair<int, long> kPairs[] = {{3, 1}, {3, 2}, {5, 1}, {5, 2}};

KappaTrace degenerate(int n, long z, int kappa) {
  return degenerate_values(n, {kappa == 1 ? K::TraceZ : K::SuperTraceZ, z});
}

void dimensions(Outcome& o) {
  for (int n : {3, 5})
    for (int kappa : {1, -1}) {
      auto eng = make_trace_engine(n, Rational(1, 4), kappa, 6);
      const int d = eng->dimension();
      o.require(d == expected_trace_dimension(n, kappa),
                "n=" + std::to_string(n) + " kappa=" + std::to_string(kappa) + " dim " + std::to_string(d));
      o.detail << "n=" << n << (kappa == 1 ? " tr:" : " str:") << d << ' ';
    }
}

void group_identities(Outcome& o) {
  std::mt19937 rng(7013);
  std::uniform_int_distribution<int> num(-9, 9), den(2, 13);
  int samples = 0;
  for (int n : {3, 5})
    for (int kappa : {1, -1})
      for (int trial = 0; trial < 3; ++trial) {
        Rational nu(num(rng), den(rng));
        nu.canonicalize();
        if (sgn(nu) == 0 || classify_nu(n, nu).trace_z || classify_nu(n, nu).supertrace_half) continue;
        const FieldContext F(n);
        KappaTrace sp;
        sp.n = n;
        sp.nu = nu;
        sp.kappa = kappa;
        const int m = (n - 1) / 2;
        for (int k = kappa == 1 ? 1 : 0; k <= m; ++k) sp.params.push_back(F.embed(Rational(num(rng), den(rng))));
        auto eng = make_trace_engine(n, nu, kappa, 2);
        std::vector<std::pair<int, Cyclo>> given;
        for (int k = kappa == 1 ? 1 : 0; k <= m; ++k) given.emplace_back(k, sp.s_value(k));
        const Functional f = eng->functional_from_group_values(given);
        auto& alg = eng->algebra();
        const Rational mu = sp.mu();

        Cyclo X, Y;
        for (int r = 0; r < n; ++r) {
          if (kappa == 1 && r > 0) X += F.sin_sq(r) * sp.s_value(r);
          if (kappa == -1) Y += F.cos_sq(r) * sp.s_value(r);
        }
        const Cyclo tr_L0 = eng->evaluate(f, alg.group_element({LQ::Kind::L, 0}));
        for (int k = 0; k < n; ++k) {
          const Cyclo Rk = eng->evaluate(f, alg.group_word({GroupWord::Kind::Reflection, k}));
          if (kappa == 1) o.require(Rk == Cyclo(-2 * mu / n) * X, "tr(R_k) closed form");
          else o.require(Rk == Cyclo(-2 * nu) * Y, "str(R_k) = -2 nu Y");
          if (kappa == 1) o.require(Rk == tr_L0, "tr(L_0) = tr(R_k)");
        }
        if (kappa == 1) {
          const Cyclo S0 = eng->evaluate(f, alg.one());
          o.require(S0 == Cyclo(2 * nu * nu * n) * X, "tr(S_0) = 2 nu^2 n X");
          o.require(S0 == Cyclo(-mu) * tr_L0, "tr(S_0) = -mu tr(L_0)");
          o.require(tr_L0 == Cyclo(-2 * mu / n) * X, "tr(L_0) = -(2 mu/n) X");
        }
        for (int p = 1; p < n; ++p)
          o.require(eng->evaluate(f, alg.group_element({LQ::Kind::L, p})).is_zero(), "sp(L_p) = 0");
        const auto gv = group_values(sp);
        for (int k = 0; k < n; ++k)
          o.require(eng->evaluate(f, alg.group_word({GroupWord::Kind::Reflection, k})) == gv.R[k], "group_values R");
        ++samples;
      }
  o.detail << samples << " random (nu, params) samples";
  o.require(samples >= 6, "too few samples");
}

void crossvalidation(Outcome& o) {
  int entries = 0;
  for (auto [n, z] : kPairs)
    for (int kappa : {1, -1}) {
      const auto sp = degenerate(n, z, kappa);
      MomentOptions opt;
      opt.brute_force_cap = 6;
      const auto mt = build_moment_table(sp, 6, opt);
      for (const auto& row : mt.provenance)
        for (auto pv : row) {
          o.require(pv == Provenance::BothAgree, "entry not cross-checked");
          ++entries;
        }
      const auto g = solve_Gk(sp);
      for (const auto& r : ode_residual(g)) o.require(r.is_zero(), "ODE residual");
      const Cyclo top(2 * Rational(1) * g.mu / n);
      o.require(g.tau == Cyclo(1), "tau");
      for (int k = 0; k < n; ++k) o.require(g.beta(k, g.mu) == top, "beta_mu^k = 2 tau mu/n");
      o.require(g.alpha(0, -g.mu).is_zero(), "alpha^0_-mu = 0");
      o.require(g.alpha(0, g.mu) == top, "alpha^0_mu = 2 tau mu/n");
      for (int l = 0; l < g.mu; ++l) o.require(g.alpha(0, l) == g.alpha(0, -l), "alpha^0 symmetry");
      o.require(g.alpha(0, g.mu) - g.alpha(0, -g.mu) == -g.sp_L0, "alpha^0_mu - alpha^0_-mu = -sp(L_0)");
    }
  o.detail << entries << " moments brute force = closed form (s <= 6); residuals 0; alpha/beta identities hold";
}

void evenness(Outcome& o) {
  for (auto [n, z] : kPairs)
    for (int kappa : {1, -1}) {
      const auto sp = degenerate(n, z, kappa);
      MomentOptions opt;
      opt.brute_force_cap = n == 3 ? 8 : 6;
      const auto mt = build_moment_table(sp, 8, opt);
      const auto series = singlet_series(solve_Gk(sp));
      for (int s = 0; s <= 3; ++s) o.require(mt.m[0][2 * s + 1].is_zero(), "odd moment nonzero");
      for (int s = 0; s <= 4; ++s) o.require(series.a(s) == mt.m[0][2 * s], "cosh series a_2s");
    }
  o.detail << "odd moments 0 for s <= 7; a_0..a_8 match the cosh series (brute force to s=8 at n=3, s=6 at n=5)";
}

void main_theorem(Outcome& o) {
  for (auto [n, z] : kPairs) {
    const int J = default_truncation(n, z);
    const auto cert = coincide(n, z, J);
    o.require(cert.verdict_equal(), "annihilators differ");
    o.require(cert.all_hold(), "supporting identity failed");
    o.detail << '(' << n << ',' << z << ") J=" << J << " equal; ";
  }
}

void degeneracy(Outcome& o) {
  const int J = 3;
  auto gram_rank = [&](const KappaTrace& sp) {
    const auto g = build_gram(build_moment_table(sp, 2 * J), J);
    std::vector<int> all(g.size());
    for (int i = 0; i < g.size(); ++i) all[i] = i;
    return std::pair{static_cast<int>(rank_of(g, all)), g.size()};
  };
  for (int kappa : {1, -1}) {
    auto [r, size] = gram_rank(degenerate(3, 1, kappa));
    o.require(r < size, "degenerate Gram has trivial kernel");
    o.detail << "(3,1)" << (kappa == 1 ? "tr" : "str") << ' ' << r << '/' << size << "; ";
  }
  const FieldContext F(3);
  for (Rational nu : {Rational(1, 4), Rational(2, 7)})
    for (int kappa : {1, -1}) {
      KappaTrace sp;
      sp.n = 3;
      sp.nu = nu;
      sp.kappa = kappa;
      sp.params = kappa == 1 ? std::vector<Cyclo>{F.embed(1)} : std::vector<Cyclo>{F.embed(1), F.embed(1)};
      auto [r, size] = gram_rank(sp);
      o.require(r == size, "Gram at generic nu not full rank");
      o.detail << "nu=" << to_string(nu) << (kappa == 1 ? " tr " : " str ") << r << '/' << size << "; ";
    }
}

void properties(Outcome& o) {
  std::mt19937 rng(99);
  // field axioms
  for (int n : {3, 5}) {
    const FieldContext F(n);
    std::uniform_int_distribution<int> c(-5, 5), e(0, 4 * n - 1);
    auto rnd = [&] {
      Cyclo x;
      for (int t = 0; t < 4; ++t) x += F.zeta(e(rng)) * Rational(c(rng), 3);
      return x;
    };
    for (int t = 0; t < 40; ++t) {
      const Cyclo a = rnd(), b = rnd(), d = rnd();
      o.require((a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d, "field axioms");
      if (!a.is_zero()) o.require(a * a.inverse() == Cyclo(1), "inverse");
      std::vector<Cyclo> v(n);
      for (auto& x : v) x = rnd();
      o.require(inverse_fourier(F, fourier(F, v)) == v, "DFT round trip");
    }
  }
  // associativity on random words up to degree 4
  for (int n : {3, 5}) {
    Algebra alg(n, Rational(5, 13));
    std::uniform_int_distribution<int> ex(0, 1), pp(0, n - 1), kind(0, 1);
    auto rnd = [&] {
      NormalWord w;
      for (auto& x : w.exps) x = static_cast<std::uint8_t>(ex(rng));
      w.group = {kind(rng) ? LQ::Kind::L : LQ::Kind::Q, pp(rng)};
      return RElement(alg, w, Rational(1));
    };
    for (int t = 0; t < 60; ++t) {
      const auto x = rnd(), y = rnd(), z = rnd();
      o.require(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)), "associativity");
    }
  }
  // singlet identities over every generator and every L_p, Q_p
  for (int n : {3, 5}) {
    Algebra alg(n, Rational(3, 8));
    const FieldContext& F = alg.field();
    const CElement s = alg.singlet();
    const Cyclo i = F.i(), imu = F.i() * alg.mu();
    const CElement L0 = alg.group_element({LQ::Kind::L, 0}).cast<Cyclo>();
    const CElement one = alg.one().cast<Cyclo>();
    for (int p = 0; p < n; ++p) {
      const CElement Q = alg.group_element({LQ::Kind::Q, p}).cast<Cyclo>();
      const CElement L = alg.group_element({LQ::Kind::L, p}).cast<Cyclo>();
      o.require(alg.mul(s, Q) == alg.mul(Q, s), "[s, Q_p] = 0");
      o.require(alg.mul(s, L) == -alg.mul(L, s), "s L_p = -L_p s");
    }
    for (Letter x : {Letter::a0, Letter::a1}) {
      const CElement X = alg.generator(x).cast<Cyclo>();
      o.require(alg.mul(s - imu * L0, X) == alg.mul(X, s + i * one + imu * L0), "(s - i mu L0) a = a (s + i + i mu L0)");
    }
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be) {
        const CElement T = alg.T(al, be).cast<Cyclo>();
        o.require(alg.mul(T, s) == alg.mul(s, T), "[T, s] = 0");
      }
  }
  o.detail << "field axioms, DFT round trip, associativity, singlet identities";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"trace-space dimensions", dimensions},
      {"group-algebra identities", group_identities},
      {"generating-function cross-validation", crossvalidation},
      {"evenness of the singlet series", evenness},
      {"ideal coincidence", main_theorem},
      {"degeneracy detection", degeneracy},
      {"property suites", properties},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " (" << timing << ") "
              << o.detail.str() << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
