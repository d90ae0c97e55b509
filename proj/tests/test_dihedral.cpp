#include "sra/dihedral.hpp"

#include <doctest.h>

#include <set>

using namespace sra;

namespace {

using K = GroupWord::Kind;

GroupAlgebraElement word(const FieldContext& F, K k, int i) { return GroupAlgebraElement::from_word(F, {k, i}); }

}  // namespace

TEST_CASE("group multiplication") {
  const int n = 5;
  CHECK(group_mul({K::Reflection, 3}, {K::Reflection, 1}, n) == GroupWord{K::Rotation, 2});
  CHECK(group_mul({K::Rotation, 3}, {K::Rotation, 4}, n) == GroupWord{K::Rotation, 2});
  CHECK(group_mul({K::Reflection, 1}, {K::Rotation, 3}, n) == GroupWord{K::Reflection, 3});
  CHECK(group_mul({K::Rotation, 1}, {K::Reflection, 3}, n) == GroupWord{K::Reflection, 4});
  for (const auto& g : group_elements(n)) {
    CHECK(group_mul(g, group_inverse(g, n), n) == GroupWord{K::Rotation, 0});
    for (const auto& h : group_elements(n))
      for (const auto& k : group_elements(n))
        CHECK(group_mul(group_mul(g, h, n), k, n) == group_mul(g, group_mul(h, k, n), n));
  }
}

TEST_CASE("conjugacy classes for odd n") {
  for (int n : {3, 5, 7}) {
    std::set<std::set<std::pair<int, int>>> classes;
    for (const auto& x : group_elements(n)) {
      std::set<std::pair<int, int>> cls;
      for (const auto& g : group_elements(n)) {
        const GroupWord c = group_mul(group_mul(g, x, n), group_inverse(g, n), n);
        cls.insert({static_cast<int>(c.kind), c.index});
      }
      classes.insert(cls);
    }
    // identity, (n-1)/2 rotation pairs, one class of reflections
    CHECK(classes.size() == static_cast<std::size_t>(2 + (n - 1) / 2));
  }
}

TEST_CASE("L/Q products") {
  const int n = 5;
  using LK = LQ::Kind;
  CHECK(lq_mul({LK::L, 2}, {LK::L, 3}, n) == LQ{LK::Q, 3});
  CHECK(!lq_mul({LK::L, 2}, {LK::L, 2}, n));
  CHECK(lq_mul({LK::L, 1}, {LK::Q, 1}, n) == LQ{LK::L, 1});
  CHECK(lq_mul({LK::Q, 4}, {LK::L, 1}, n) == LQ{LK::L, 1});
  CHECK(lq_mul({LK::Q, 2}, {LK::Q, 2}, n) == LQ{LK::Q, 2});
  CHECK(!lq_mul({LK::Q, 2}, {LK::Q, 1}, n));
  CHECK(to_string(LQ{LK::L, 4}) == "L4");
}

TEST_CASE("L/Q table agrees with the group product") {
  for (int n : {3, 5}) {
    const FieldContext F(n);
    const auto els = group_elements(n);
    for (const auto& g : els)
      for (const auto& h : els) {
        const auto lhs = word(F, g.kind, g.index) * word(F, h.kind, h.index);
        const GroupWord gh = group_mul(g, h, n);
        CHECK(lhs == word(F, gh.kind, gh.index));
      }
    auto one = GroupAlgebraElement::unit(F);
    for (int p = 0; p < n; ++p) {
      for (auto k : {LQ::Kind::L, LQ::Kind::Q}) {
        auto b = GroupAlgebraElement::basis(F, {k, p});
        CHECK(one * b == b);
        CHECK(b * one == b);
      }
    }
  }
}

TEST_CASE("Fourier transform") {
  const FieldContext F(3);
  std::vector<Cyclo> f{F.embed(1), F.embed(0), F.embed(0)};
  auto g = fourier(F, f);
  for (const auto& v : g) CHECK(v == Cyclo(1));
  std::vector<Cyclo> h{F.embed(2), F.i(), F.lambda(1) + F.embed(Rational(1, 3))};
  CHECK(inverse_fourier(F, fourier(F, h)) == h);
  CHECK(fourier(F, inverse_fourier(F, h)) == h);
  auto delta = inverse_fourier(F, std::vector<Cyclo>{F.embed(0), F.embed(1), F.embed(0)});
  for (int p = 0; p < 3; ++p) CHECK(delta[p] == F.lambda(-p) * Rational(1, 3));
  CHECK_THROWS_AS(fourier(F, std::vector<Cyclo>{F.embed(1)}), ConfigError);
}

TEST_CASE("R/S coordinates round trip") {
  const FieldContext F(5);
  GroupAlgebraElement e(F);
  e.add({LQ::Kind::L, 2}, F.i());
  e.add({LQ::Kind::Q, 0}, F.embed(Rational(3, 2)));
  e.add({LQ::Kind::Q, 4}, F.lambda(2));
  CHECK(GroupAlgebraElement::from_rs(F, e.to_rs()) == e);
  auto r2 = word(F, K::Reflection, 2).to_rs();
  for (int k = 0; k < 10; ++k) CHECK(r2[k] == Cyclo(k == 2 ? 1 : 0));
  CHECK(GroupAlgebraElement::unit(F).to_rs()[5] == Cyclo(1));
  e.add({LQ::Kind::Q, 0}, -F.embed(Rational(3, 2)));
  CHECK(e.coeff({LQ::Kind::Q, 0}).is_zero());
  CHECK(e.terms().size() == 2);
}
