#include "sra/dihedral.hpp"

namespace sra {

GroupWord group_mul(const GroupWord& x, const GroupWord& y, int n) {
  using K = GroupWord::Kind;
  if (x.kind == K::Reflection && y.kind == K::Reflection) return {K::Rotation, mod_n(x.index - y.index, n)};
  if (x.kind == K::Rotation && y.kind == K::Rotation) return {K::Rotation, mod_n(x.index + y.index, n)};
  if (x.kind == K::Reflection) return {K::Reflection, mod_n(x.index - y.index, n)};
  return {K::Reflection, mod_n(x.index + y.index, n)};
}

GroupWord group_inverse(const GroupWord& x, int n) {
  if (x.kind == GroupWord::Kind::Reflection) return x;
  return {GroupWord::Kind::Rotation, mod_n(-x.index, n)};
}

std::vector<GroupWord> group_elements(int n) {
  std::vector<GroupWord> out;
  for (int k = 0; k < n; ++k) out.push_back({GroupWord::Kind::Reflection, k});
  for (int k = 0; k < n; ++k) out.push_back({GroupWord::Kind::Rotation, k});
  return out;
}

std::optional<LQ> lq_mul(const LQ& x, const LQ& y, int n) {
  using K = LQ::Kind;
  const bool sum_rule = (x.kind == K::L && y.kind == K::L) || (x.kind == K::Q && y.kind == K::L);
  const int idx = sum_rule ? mod_n(x.p + y.p, n) : mod_n(x.p - y.p, n);
  if (idx != 0) return std::nullopt;
  return LQ{x.kind == y.kind ? K::Q : K::L, y.p};
}

std::string to_string(const LQ& g) { return (g.kind == LQ::Kind::L ? "L" : "Q") + std::to_string(g.p); }

GroupAlgebraElement GroupAlgebraElement::basis(const FieldContext& ctx, LQ g) {
  GroupAlgebraElement e(ctx);
  e.add(g, ctx.embed(1));
  return e;
}

GroupAlgebraElement GroupAlgebraElement::from_word(const FieldContext& ctx, GroupWord w) {
  GroupAlgebraElement e(ctx);
  const int n = ctx.n();
  for (int p = 0; p < n; ++p) {
    if (w.kind == GroupWord::Kind::Reflection)
      e.add({LQ::Kind::L, p}, ctx.lambda(-static_cast<long>(w.index) * p));
    else
      e.add({LQ::Kind::Q, p}, ctx.lambda(static_cast<long>(w.index) * p));
  }
  return e;
}

GroupAlgebraElement GroupAlgebraElement::unit(const FieldContext& ctx) {
  return from_word(ctx, {GroupWord::Kind::Rotation, 0});
}

Cyclo GroupAlgebraElement::coeff(LQ g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Cyclo() : it->second;
}

void GroupAlgebraElement::add(LQ g, const Cyclo& c) {
  g.p = mod_n(g.p, ctx_->n());
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<Cyclo> GroupAlgebraElement::to_rs() const {
  // L_p = (1/n) sum_k lambda^{kp} R_k, Q_p = (1/n) sum_k lambda^{-kp} S_k.
  const int n = ctx_->n();
  std::vector<Cyclo> rs(2 * n, ctx_->embed(0));
  const Rational inv_n(1, n);
  for (const auto& [g, c] : terms_) {
    for (int k = 0; k < n; ++k) {
      const long e = static_cast<long>(k) * g.p;
      if (g.kind == LQ::Kind::L) rs[k] += c * ctx_->lambda(e) * inv_n;
      else rs[n + k] += c * ctx_->lambda(-e) * inv_n;
    }
  }
  return rs;
}

GroupAlgebraElement GroupAlgebraElement::from_rs(const FieldContext& ctx, const std::vector<Cyclo>& rs) {
  const int n = ctx.n();
  if (static_cast<int>(rs.size()) != 2 * n) throw ConfigError("from_rs: expected 2n coefficients");
  GroupAlgebraElement e(ctx);
  for (int k = 0; k < n; ++k) {
    if (!rs[k].is_zero()) e = e + from_word(ctx, {GroupWord::Kind::Reflection, k}) * rs[k];
    if (!rs[n + k].is_zero()) e = e + from_word(ctx, {GroupWord::Kind::Rotation, k}) * rs[n + k];
  }
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(*ctx_);
  for (const auto& [g, c] : terms_)
    for (const auto& [h, d] : o.terms_)
      if (auto gh = lq_mul(g, h, ctx_->n())) r.add(*gh, c * d);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add(g, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Cyclo& s) const {
  GroupAlgebraElement r(*ctx_);
  for (const auto& [g, c] : terms_) r.add(g, c * s);
  return r;
}

}  // namespace sra
