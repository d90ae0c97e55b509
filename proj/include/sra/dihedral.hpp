#pragma once

#include "sra/exactnum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sra {

/// Index reduced into [0, n).
inline int mod_n(long k, int n) { return static_cast<int>(((k % n) + n) % n); }

/// R_k (reflection) or S_k (rotation) of I_2(n).
struct GroupWord {
  enum class Kind { Reflection, Rotation };
  Kind kind;
  int index;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// R_k R_l = S_{k-l}, S_k S_l = S_{k+l}, R_k S_l = R_{k-l}, S_k R_l = R_{k+l}.
GroupWord group_mul(const GroupWord& x, const GroupWord& y, int n);
GroupWord group_inverse(const GroupWord& x, int n);
std::vector<GroupWord> group_elements(int n);

/// L_p or Q_p, the Fourier idempotent-type basis of C[I_2(n)].
struct LQ {
  enum class Kind : unsigned char { L = 0, Q = 1 };
  Kind kind;
  int p;

  friend auto operator<=>(const LQ&, const LQ&) = default;
};

/// Product of two basis elements: one basis element (coefficient 1) or zero.
///   L_k L_l = d_{k+l} Q_l,  L_k Q_l = d_{k-l} L_l,
///   Q_k L_l = d_{k+l} L_l,  Q_k Q_l = d_{k-l} Q_l.
std::optional<LQ> lq_mul(const LQ& x, const LQ& y, int n);

std::string to_string(const LQ& g);

/// Element of C[I_2(n)], stored sparsely in the {L_p, Q_p} basis.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(const FieldContext& ctx) : ctx_(&ctx) {}

  static GroupAlgebraElement basis(const FieldContext& ctx, LQ g);
  /// R_k = sum_p lambda^{-kp} L_p, S_k = sum_p lambda^{kp} Q_p.
  static GroupAlgebraElement from_word(const FieldContext& ctx, GroupWord w);
  static GroupAlgebraElement unit(const FieldContext& ctx);

  const std::map<LQ, Cyclo>& terms() const { return terms_; }
  Cyclo coeff(LQ g) const;
  void add(LQ g, const Cyclo& c);

  /// Coefficients on R_0..R_{n-1}, S_0..S_{n-1}.
  std::vector<Cyclo> to_rs() const;
  static GroupAlgebraElement from_rs(const FieldContext& ctx, const std::vector<Cyclo>& rs);

  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Cyclo& s) const;
  bool operator==(const GroupAlgebraElement& o) const { return terms_ == o.terms_; }

  const FieldContext& context() const { return *ctx_; }

private:
  const FieldContext* ctx_;
  std::map<LQ, Cyclo> terms_;
};

/// Forward transform G_k = sum_p lambda^{kp} F_p over Z_n.
/// V must support V + V and Cyclo * V.
template <typename V>
std::vector<V> fourier(const FieldContext& ctx, const std::vector<V>& f) {
  const int n = ctx.n();
  if (static_cast<int>(f.size()) != n) throw ConfigError("fourier: input length must be n");
  std::vector<V> g;
  g.reserve(n);
  for (int k = 0; k < n; ++k) {
    V acc = ctx.lambda(0) * f[0];
    for (int p = 1; p < n; ++p) acc = acc + ctx.lambda(static_cast<long>(k) * p) * f[p];
    g.push_back(acc);
  }
  return g;
}

/// Inverse transform F_p = (1/n) sum_k lambda^{-kp} G_k.
template <typename V>
std::vector<V> inverse_fourier(const FieldContext& ctx, const std::vector<V>& g) {
  const int n = ctx.n();
  if (static_cast<int>(g.size()) != n) throw ConfigError("inverse_fourier: input length must be n");
  const Cyclo inv_n = ctx.embed(Rational(1, n));
  std::vector<V> f;
  f.reserve(n);
  for (int p = 0; p < n; ++p) {
    V acc = ctx.lambda(0) * g[0];
    for (int k = 1; k < n; ++k) acc = acc + ctx.lambda(-static_cast<long>(k) * p) * g[k];
    f.push_back(inv_n * acc);
  }
  return f;
}

}  // namespace sra
