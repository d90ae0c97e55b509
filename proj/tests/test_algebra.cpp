#include "sra/algebra.hpp"

#include <doctest.h>

#include <random>

using namespace sra;

namespace {

constexpr Letter kLetters[] = {Letter::a0, Letter::a1, Letter::b0, Letter::b1};

std::vector<NormalWord> words_up_to(int n, int max_degree) {
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

RElement word_element(Algebra& alg, const NormalWord& w) { return RElement(alg, w, Rational(1)); }

CElement lift(const RElement& e) { return e.cast<Cyclo>(); }

CElement group(Algebra& alg, LQ g) { return lift(alg.group_element(g)); }

}  // namespace

TEST_CASE("defining relations") {
  Algebra alg(3, Rational(1, 5));
  const Rational mu = alg.mu();
  auto a0 = alg.generator(Letter::a0), a1 = alg.generator(Letter::a1);
  auto b0 = alg.generator(Letter::b0), b1 = alg.generator(Letter::b1);
  auto L = [&](int p) { return alg.group_element({LQ::Kind::L, p}); };
  auto one = alg.one();

  CHECK(alg.mul(a0, a1) - alg.mul(a1, a0) == mu * L(1));
  CHECK(alg.mul(b0, b1) - alg.mul(b1, b0) == mu * L(-1 + 3));
  CHECK(alg.mul(a0, b1) - alg.mul(b1, a0) == one + mu * L(0));
  CHECK(alg.mul(a1, b0) - alg.mul(b0, a1) == -(one + mu * L(0)));
  CHECK(alg.mul(a0, b0) - alg.mul(b0, a0) == RElement(alg));
  CHECK(alg.mul(L(0), a0) == -alg.mul(b0, L(1)));
  CHECK(alg.mul(L(2), b1) == -alg.mul(a1, L(1)));
  auto Q = [&](int p) { return alg.group_element({LQ::Kind::Q, p}); };
  CHECK(alg.mul(Q(0), a0) == alg.mul(a0, Q(1)));
  CHECK(alg.mul(Q(0), b1) == alg.mul(b1, Q(2)));

  const auto c = alg.commutator(Letter::a0, Letter::b1);
  CHECK(c.unit == 1);
  CHECK(c.l_coeff == mu);
  CHECK(c.l_index == 0);
}

TEST_CASE("unit and group words") {
  Algebra alg(5, Rational(2, 7));
  auto one = alg.one();
  for (const auto& w : words_up_to(5, 2)) {
    auto e = word_element(alg, w);
    CHECK(alg.mul(e, one) == e);
    CHECK(alg.mul(one, e) == e);
  }
  const FieldContext& F = alg.field();
  auto r1 = alg.group_word({GroupWord::Kind::Reflection, 1});
  auto s1 = alg.group_word({GroupWord::Kind::Rotation, 1});
  CHECK(alg.mul(r1, s1) == alg.group_word({GroupWord::Kind::Reflection, 0}));
  CHECK(alg.mul(r1, r1) == lift(one));
  CHECK(s1.terms().begin()->second == F.lambda(0));
}

TEST_CASE("associativity exhaustive at total degree 2") {
  Algebra alg(3, Rational(1, 4));
  const auto ws = words_up_to(3, 2);
  std::vector<NormalWord> small;
  for (const auto& w : ws)
    if (w.degree() <= 2) small.push_back(w);
  int checked = 0;
  for (const auto& x : small)
    for (const auto& y : small) {
      if (x.degree() + y.degree() > 2) continue;
      for (const auto& z : small) {
        if (x.degree() + y.degree() + z.degree() > 2) continue;
        auto X = word_element(alg, x), Y = word_element(alg, y), Z = word_element(alg, z);
        REQUIRE(alg.mul(alg.mul(X, Y), Z) == alg.mul(X, alg.mul(Y, Z)));
        ++checked;
      }
    }
  CHECK(checked > 1000);
}

TEST_CASE("associativity on random triples up to degree 4") {
  for (int n : {3, 5}) {
    Algebra alg(n, Rational(3, 11));
    const auto ws = words_up_to(n, 4);
    std::mt19937 rng(4242 + n);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_element = [&] {
      RElement e(alg);
      for (int t = 0; t < 3; ++t) e.add(ws[pick(rng)], Rational(coef(rng)));
      return e;
    };
    for (int trial = 0; trial < 40; ++trial) {
      auto X = random_element(), Y = random_element(), Z = random_element();
      auto XY = alg.mul(X, Y);
      REQUIRE(alg.mul(XY, Z) == alg.mul(X, alg.mul(Y, Z)));
      if (!XY.is_zero()) CHECK(XY.degree() <= X.degree() + Y.degree());
    }
  }
}

TEST_CASE("parity grading and filtration") {
  Algebra alg(5, Rational(1, 3));
  const auto ws = words_up_to(5, 2);
  for (std::size_t i = 0; i < ws.size(); i += 7)
    for (std::size_t j = 0; j < ws.size(); j += 5) {
      auto prod = alg.mul(word_element(alg, ws[i]), word_element(alg, ws[j]));
      if (prod.is_zero()) continue;
      CHECK(prod.parity() == (ws[i].parity() + ws[j].parity()) % 2);
      CHECK(prod.degree() <= ws[i].degree() + ws[j].degree());
      for (const auto& [w, c] : prod.terms()) CHECK(w.weight() == ws[i].weight() + ws[j].weight());
    }
}

TEST_CASE("singlet commutation relations, exhaustive") {
  for (int n : {3, 5}) {
    for (Rational nu : {Rational(1, 4), Rational(-2, 3)}) {
      Algebra alg(n, nu);
      const FieldContext& F = alg.field();
      const CElement s = alg.singlet();
      const Cyclo i = F.i();
      const Cyclo imu = i * alg.mu();
      CHECK(s.degree() == 2);
      CHECK(s.parity() == 0);
      const CElement L0 = group(alg, {LQ::Kind::L, 0});
      const CElement one = lift(alg.one());
      for (int p = 0; p < n; ++p) {
        const CElement Q = group(alg, {LQ::Kind::Q, p}), L = group(alg, {LQ::Kind::L, p});
        CHECK(alg.mul(s, Q) == alg.mul(Q, s));
        CHECK(alg.mul(s, L) == -alg.mul(L, s));
      }
      for (Letter x : kLetters) {
        const CElement X = lift(alg.generator(x));
        if (!letter_is_b(x)) {
          CHECK(alg.mul(s - imu * L0, X) == alg.mul(X, s + i * one + imu * L0));
        } else {
          CHECK(alg.mul(s + imu * L0, X) == alg.mul(X, s - i * one - imu * L0));
        }
      }
      for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
          const CElement T = lift(alg.T(al, be));
          CHECK(alg.mul(T, s) == alg.mul(s, T));
        }
    }
  }
}

TEST_CASE("singlet powers lie in H0") {
  Algebra alg(3, Rational(1, 4));
  const CElement s = alg.singlet();
  CElement sj = lift(alg.one());
  for (int j = 0; j <= 3; ++j) {
    for (int p = 0; p < 3; ++p) {
      for (auto k : {LQ::Kind::Q, LQ::Kind::L}) {
        const CElement e = alg.mul(sj, group(alg, {k, p}));
        if (j == 0) {
          REQUIRE(e.size() == 1);
          CHECK(e.terms().begin()->first.degree() == 0);
        }
        CHECK(e.degree() == 2 * j);
        for (int al = 0; al < 2; ++al)
          for (int be = 0; be < 2; ++be) {
            const CElement T = lift(alg.T(al, be));
            CHECK(alg.mul(T, e) == alg.mul(e, T));
          }
      }
    }
    sj = alg.mul(sj, s);
  }
}

TEST_CASE("element parser") {
  Algebra alg(3, Rational(1, 2));
  const FieldContext& F = alg.field();
  auto e = parse_element(alg, "a0 b1 - b1 a0");
  CHECK(e == lift(alg.one() + alg.mu() * alg.group_element({LQ::Kind::L, 0})));
  CHECK(parse_element(alg, "L0 a0") == -lift(alg.mul(alg.generator(Letter::b0), alg.group_element({LQ::Kind::L, 1}))));
  CHECK(parse_element(alg, "s") == alg.singlet());
  CHECK(parse_element(alg, "i * S0") == F.i() * lift(alg.one()));
  CHECK(parse_element(alg, "(a0 + a1)^2") == parse_element(alg, "a0 a0 + a0 a1 + a1 a0 + a1 a1"));
  CHECK(parse_element(alg, "R1") == alg.group_word({GroupWord::Kind::Reflection, 1}));
  CHECK_THROWS(parse_element(alg, "a0 +"));
  CHECK_THROWS(parse_element(alg, "c7"));
}

TEST_CASE("mixing algebras is rejected") {
  Algebra a(3, Rational(1, 2)), b(3, Rational(1, 3)), c(3, Rational(1, 2));
  CHECK_THROWS_AS(a.mul(a.generator(Letter::a0), b.generator(Letter::a0)), UsageError);
  CHECK_THROWS_AS(a.generator(Letter::a0) + b.generator(Letter::a0), UsageError);
  CHECK_NOTHROW(a.generator(Letter::a0) + c.generator(Letter::a0));
  CHECK_THROWS_AS(Algebra(4, Rational(1)), ConfigError);
  CHECK_THROWS_AS(Algebra(1, Rational(1)), ConfigError);
}
