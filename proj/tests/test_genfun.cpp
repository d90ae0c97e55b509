#include "sra/genfun.hpp"

#include <doctest.h>

using namespace sra;

namespace {

using K = DegenerateFamily::Kind;

GenFunSet family(int n, long z, int kappa, Rational tau = Rational(1)) {
  return solve_Gk(degenerate_values(n, {kappa == 1 ? K::TraceZ : K::SuperTraceZ, z, tau}));
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const FieldContext F(3);
  const LaurentPoly y = LaurentPoly::monomial(1, F.embed(1));
  const LaurentPoly inv = LaurentPoly::monomial(-1, F.embed(1));
  CHECK(y * inv == LaurentPoly::monomial(0, F.embed(1)));
  CHECK((y + inv).reflect() == y + inv);
  CHECK((y - inv).euler() == y + inv);
  CHECK((y * y + inv)(F.embed(2)) == Cyclo(Rational(9, 2)));
  const LaurentPoly lin = y - LaurentPoly::monomial(0, F.lambda(1));
  const LaurentPoly f = lin * lin * (y + inv);
  CHECK(f.divide_by_square(F.lambda(1)) == y + inv);
  CHECK_THROWS_AS((lin * (y + inv)).divide_by_square(F.lambda(1)), ArithmeticError);
  CHECK(f.min_exponent() == -1);
  CHECK(f.max_exponent() == 3);
  CHECK((y - y).is_zero());
}

TEST_CASE("leading coefficients and support") {
  for (auto [n, z] : {std::pair{3, 1L}, std::pair{3, 2L}, std::pair{5, 1L}, std::pair{5, 2L}, std::pair{5, 3L}}) {
    for (int kappa : {1, -1}) {
      for (Rational tau : {Rational(1), Rational(-5, 2)}) {
        const auto g = family(n, z, kappa, tau);
        const Cyclo top = Cyclo(2 * tau * g.mu / n);
        CHECK(g.tau == Cyclo(tau));
        for (int k = 0; k < n; ++k) {
          CHECK(g.beta(k, g.mu) == top);
          CHECK(g.G[k].max_exponent() <= g.mu);
          CHECK(g.G[k].min_exponent() >= 1 - g.mu);
          if (!g.F[k].is_zero()) CHECK(g.F[k].min_exponent() >= -g.mu);
        }
        CHECK(g.alpha(0, g.mu) == top);
        CHECK(g.alpha(0, -g.mu).is_zero());
        CHECK(g.alpha(0, g.mu) - g.alpha(0, -g.mu) == -g.sp_L0);
        for (int l = 0; l < g.mu; ++l) CHECK(g.alpha(0, l) == g.alpha(0, -l));
        CHECK(degeneracy_form_check(g));
      }
    }
  }
}

TEST_CASE("mu = 1 leaves only F_0") {
  for (int kappa : {1, -1}) {
    const auto g = family(3, 1, kappa);
    CHECK(g.mu == 1);
    CHECK(g.F[1].is_zero());
    CHECK(g.F[2].is_zero());
    for (int p : {1, 2})
      for (const auto& m : moments_from_closed_form(g, p, 5)) CHECK(m.is_zero());
  }
}

TEST_CASE("ODE residuals vanish") {
  for (auto [n, z] : {std::pair{3, 1L}, std::pair{3, 2L}, std::pair{5, 2L}, std::pair{5, 4L}, std::pair{7, 3L}})
    for (int kappa : {1, -1}) {
      const auto g = family(n, z, kappa);
      for (const auto& r : ode_residual(g)) CHECK(r.is_zero());
    }
}

TEST_CASE("closed-form moments at low order") {
  const FieldContext F(3);
  for (int kappa : {1, -1}) {
    const auto sp = degenerate_values(3, {kappa == 1 ? K::TraceZ : K::SuperTraceZ, 1});
    const auto g = solve_Gk(sp);
    const auto gv = group_values(sp);
    for (int p = 0; p < 3; ++p) CHECK(moments_from_closed_form(g, p, 0)[0] == gv.Q[p]);
    const auto m0 = moments_from_closed_form(g, 0, 1);
    CHECK(m0[1] == -F.i() * Rational(g.mu) * g.sp_L0);
    CHECK(g.sp_L0 == gv.L[0]);
  }
}

TEST_CASE("closed-form moments match brute-force evaluation") {
  for (auto [n, z] : {std::pair{3, 1L}, std::pair{3, 2L}, std::pair{5, 2L}})
    for (int kappa : {1, -1}) {
      const auto sp = degenerate_values(n, {kappa == 1 ? K::TraceZ : K::SuperTraceZ, z});
      const auto g = solve_Gk(sp);
      const int s_max = 3;
      TraceEvaluator ev(sp, 2 * s_max);
      auto& alg = ev.engine().algebra();
      const CElement s = alg.singlet();
      for (int p = 0; p < n; ++p) {
        const auto closed = singlet_moments(g, p, s_max);
        CElement x = alg.group_element({LQ::Kind::Q, p}).cast<Cyclo>();
        for (int j = 0; j <= s_max; ++j) {
          CHECK(ev(x) == closed[j]);
          x = alg.mul(s, x);
        }
      }
    }
}

TEST_CASE("singlet series") {
  for (auto [n, z] : {std::pair{3, 1L}, std::pair{3, 2L}, std::pair{5, 2L}})
    for (int kappa : {1, -1}) {
      const auto g = family(n, z, kappa);
      const auto ser = singlet_series(g);
      CHECK(ser.mu == g.mu);
      CHECK(ser.constant == g.alpha(0, g.mu));
      const auto direct = singlet_moments(g, 0, 8);
      const auto even = even_moments_operator(g, 4);
      for (int s = 0; s <= 4; ++s) {
        CHECK(ser.a(s) == direct[2 * s]);
        CHECK(even[s] == direct[2 * s]);
      }
      for (int s = 0; s < 4; ++s) CHECK(direct[2 * s + 1].is_zero());
    }
  // n=3, z=4 (mu=4) pins the weights 0 < l < mu.
  const auto ser = singlet_series(family(3, 4, 1, Rational(1)));
  const auto m = singlet_moments(family(3, 4, 1, Rational(1)), 0, 4);
  CHECK(ser.a(0) == m[0]);
  CHECK(ser.a(1) == m[2]);
  CHECK(ser.a(2) == m[4]);
}

TEST_CASE("mu = 1 series has one cosh term") {
  const auto g = family(3, 1, -1);
  const auto ser = singlet_series(g);
  REQUIRE(ser.terms.size() == 1);
  CHECK(ser.terms[0].first == 0);
  CHECK(ser.a(0) == ser.constant + ser.terms[0].second);
  for (int s = 1; s <= 3; ++s) CHECK(ser.a(s) == ser.terms[0].second);
}

TEST_CASE("kappa does not change the coefficient tables") {
  for (auto [n, z] : {std::pair{3, 1L}, std::pair{3, 2L}, std::pair{5, 1L}, std::pair{5, 2L}}) {
    CHECK(same_coefficients(family(n, z, 1), family(n, z, -1)));
    CHECK(same_coefficients(family(n, z, 1, Rational(3)), family(n, z, -1, Rational(3))));
    CHECK_FALSE(same_coefficients(family(n, z, 1, Rational(3)), family(n, z, -1, Rational(2))));
  }
}

TEST_CASE("mu and -mu give the same functions") {
  for (int kappa : {1, -1}) {
    const auto a = family(5, 2, kappa), b = family(5, -2, kappa);
    CHECK(b.folded);
    CHECK(a.mu == b.mu);
    for (int k = 0; k < 5; ++k) {
      CHECK(a.G[k] == b.G[k]);
      CHECK(a.F[k] == b.F[k]);
    }
  }
}

TEST_CASE("non-degenerate input is rejected") {
  const FieldContext F(5);
  KappaTrace sp;
  sp.n = 5;
  sp.nu = Rational(1, 5);
  sp.kappa = 1;
  sp.params = {F.embed(1), F.embed(0)};
  CHECK_THROWS_AS(solve_Gk(sp), ArithmeticError);
  sp.nu = Rational(1, 4);
  CHECK_THROWS_AS(solve_Gk(sp), ConfigError);
  sp.nu = Rational(1);
  CHECK_THROWS_AS(solve_Gk(sp), ConfigError);
}

TEST_CASE("classification of nu") {
  auto c = classify_nu(3, Rational(1, 3));
  CHECK(c.trace_z);
  CHECK(c.z == 1);
  c = classify_nu(3, Rational(3, 2));
  CHECK(c.supertrace_half);
  CHECK_FALSE(c.trace_z);
  CHECK(c.z == 1);
  CHECK(classify_nu(3, Rational(1)).none_known());
  CHECK(classify_nu(5, Rational(1, 4)).none_known());
  c = classify_nu(5, Rational(-7, 5));
  CHECK(c.trace_z);
  CHECK(c.z == -7);
  CHECK_THROWS_AS(classify_nu(4, Rational(1, 2)), ConfigError);
}
