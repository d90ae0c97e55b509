#include "sra/kappa_trace.hpp"

#include <doctest.h>

using namespace sra;

namespace {

KappaTrace make(int n, Rational nu, int kappa, std::vector<Cyclo> params) {
  KappaTrace sp;
  sp.n = n;
  sp.nu = nu;
  sp.kappa = kappa;
  sp.params = std::move(params);
  return sp;
}

std::vector<NormalWord> low_words(int n, int max_degree) {
  std::vector<NormalWord> out;
  for (int e0 = 0; e0 <= max_degree; ++e0)
    for (int e1 = 0; e0 + e1 <= max_degree; ++e1)
      for (int e2 = 0; e0 + e1 + e2 <= max_degree; ++e2)
        for (int e3 = 0; e0 + e1 + e2 + e3 <= max_degree; ++e3)
          for (int p = 0; p < n; ++p)
            for (auto k : {LQ::Kind::L, LQ::Kind::Q}) {
              NormalWord w;
              w.exps = {std::uint8_t(e0), std::uint8_t(e1), std::uint8_t(e2), std::uint8_t(e3)};
              w.group = {k, p};
              out.push_back(w);
            }
  return out;
}

}  // namespace

TEST_CASE("expected dimensions") {
  CHECK(expected_trace_dimension(3, 1) == 1);
  CHECK(expected_trace_dimension(3, -1) == 2);
  CHECK(expected_trace_dimension(5, 1) == 2);
  CHECK(expected_trace_dimension(5, -1) == 3);
}

TEST_CASE("solved trace spaces have the predicted dimension") {
  for (auto [n, kappa] : {std::pair{3, 1}, std::pair{3, -1}, std::pair{5, 1}, std::pair{5, -1}}) {
    auto eng = make_trace_engine(n, Rational(1, 4), kappa, 4);
    CHECK(eng->dimension() == expected_trace_dimension(n, kappa));
    for (const auto& w : eng->trace_space_basis()) CHECK(w.degree() == 0);
  }
}

TEST_CASE("too little slack is reported") {
  TraceEngine eng(3, Rational(2, 7), 1, 4, 0);
  CHECK(eng.dimension() > expected_trace_dimension(3, 1));
  CHECK_THROWS_AS(make_trace_engine(3, Rational(2, 7), 1, 4, 0, 0), InsufficientSlack);
}

TEST_CASE("group values from the closed forms") {
  const FieldContext F(3);
  const Rational nu(1, 5);
  SUBCASE("trace, n=3, s_1 = 1") {
    const auto gv = group_values(make(3, nu, 1, {F.embed(1)}));
    CHECK(gv.x_or_y == Cyclo(Rational(3, 2)));
    for (const auto& r : gv.R) CHECK(r == Cyclo(-3 * nu));
    CHECK(gv.S[0] == Cyclo(9 * nu * nu));
    CHECK(gv.S[0] == Cyclo(-3 * nu) * gv.L[0]);
    CHECK(gv.L[1].is_zero());
    CHECK(gv.L[2].is_zero());
  }
  SUBCASE("supertrace, n=3, u_0 = u_1 = 1") {
    const auto gv = group_values(make(3, nu, -1, {F.embed(1), F.embed(1)}));
    CHECK(gv.x_or_y == Cyclo(Rational(3, 2)));
    for (const auto& r : gv.R) CHECK(r == Cyclo(-3 * nu));
  }
  SUBCASE("zero parameters") {
    const auto gv = group_values(make(3, nu, 1, {F.embed(0)}));
    for (const auto& v : gv.S) CHECK(v.is_zero());
    for (const auto& v : gv.R) CHECK(v.is_zero());
  }
}

TEST_CASE("degenerate families") {
  using K = DegenerateFamily::Kind;
  const auto tr = degenerate_values(3, {K::TraceZ, 1});
  CHECK(tr.nu == Rational(1, 3));
  CHECK(tr.s_value(1) == Cyclo(Rational(2, 3)));
  const auto str = degenerate_values(3, {K::SuperTraceZ, 1});
  CHECK(str.kappa == -1);
  CHECK(str.s_value(0) == Cyclo(Rational(2, 3)));
  CHECK(str.s_value(1) == Cyclo(Rational(2, 3)));
  CHECK(str.s_value(2) == str.s_value(1));
  const auto half = degenerate_values(3, {K::SuperTraceHalf, 0});
  CHECK(half.nu == Rational(1, 2));
  CHECK(half.s_value(1) == Cyclo(Rational(4, 3)));
  CHECK_THROWS_AS(degenerate_values(3, {K::TraceZ, 3}), ConfigError);
  CHECK_THROWS_AS(degenerate_values(5, {K::SuperTraceZ, -10}), ConfigError);
  const auto scaled = degenerate_values(5, {K::TraceZ, 2, Rational(3)});
  const auto unit = degenerate_values(5, {K::TraceZ, 2});
  for (int k = 0; k < 5; ++k) CHECK(scaled.s_value(k) == unit.s_value(k) * Rational(3));
}

TEST_CASE("evaluation reproduces the group values") {
  const FieldContext F(5);
  for (int kappa : {1, -1}) {
    KappaTrace sp = kappa == 1 ? make(5, Rational(2, 9), 1, {F.embed(1), F.cos2pi(1)})
                               : make(5, Rational(2, 9), -1, {F.embed(2), F.i() * F.i(), F.embed(Rational(1, 3))});
    TraceEvaluator ev(sp, 2);
    auto& alg = ev.engine().algebra();
    const auto gv = group_values(sp);
    for (int k = 0; k < 5; ++k) {
      CHECK(ev(alg.group_word({GroupWord::Kind::Rotation, k})) == gv.S[k]);
      CHECK(ev(alg.group_word({GroupWord::Kind::Reflection, k})) == gv.R[k]);
      CHECK(ev(alg.group_element({LQ::Kind::L, k})) == gv.L[k]);
      CHECK(ev(alg.group_element({LQ::Kind::Q, k})) == gv.Q[k]);
    }
  }
}

TEST_CASE("kappa-commutators vanish on word pairs") {
  const FieldContext F(3);
  for (int kappa : {1, -1}) {
    KappaTrace sp = kappa == 1 ? make(3, Rational(1, 7), 1, {F.embed(1)})
                               : make(3, Rational(1, 7), -1, {F.embed(1), F.embed(-2)});
    TraceEvaluator ev(sp, 4);
    auto& alg = ev.engine().algebra();
    const auto ws = low_words(3, 2);
    int nonzero_values = 0;
    for (std::size_t i = 0; i < ws.size(); i += 3)
      for (std::size_t j = 0; j < ws.size(); j += 2) {
        RElement x(alg, ws[i], Rational(1)), y(alg, ws[j], Rational(1));
        const int sign = (kappa == -1 && ws[i].parity() && ws[j].parity()) ? -1 : 1;
        CHECK(ev(alg.mul(x, y) - Rational(sign) * alg.mul(y, x)).is_zero());
        if (!ev(alg.mul(x, y)).is_zero()) ++nonzero_values;
      }
    CHECK(nonzero_values > 0);
  }
}

TEST_CASE("degenerate functional lies in the solved space") {
  const auto sp = degenerate_values(3, {DegenerateFamily::Kind::SuperTraceZ, 2});
  auto eng = make_trace_engine(3, sp.nu, sp.kappa, 4);
  const auto f = eng->functional(sp);
  const auto gv = group_values(sp);
  auto& alg = eng->algebra();
  CHECK(eng->evaluate(f, alg.group_word({GroupWord::Kind::Reflection, 0})) == gv.R[0]);
  CHECK(eng->evaluate(f, alg.one()) == gv.S[0]);
  CHECK(eng->evaluate(f, alg.group_element({LQ::Kind::L, 0})) == gv.L[0]);
}
