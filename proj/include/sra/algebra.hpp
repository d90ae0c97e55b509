#pragma once

#include "sra/dihedral.hpp"
#include "sra/exactnum.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace sra {

/// Generators of the Weyl-like part, in normal-form order a0 < a1 < b0 < b1.
enum class Letter : std::uint8_t { a0 = 0, a1 = 1, b0 = 2, b1 = 3 };

inline int letter_alpha(Letter x) { return static_cast<int>(x) & 1; }
inline bool letter_is_b(Letter x) { return static_cast<int>(x) >= 2; }
std::string to_string(Letter x);

/// Ordered monomial a0^e0 a1^e1 b0^e2 b1^e3 followed by one L_p or Q_p.
struct NormalWord {
  std::array<std::uint8_t, 4> exps{0, 0, 0, 0};
  LQ group{LQ::Kind::Q, 0};

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  int parity() const { return degree() & 1; }
  /// #index-0 generators minus #index-1 generators; preserved by all relations.
  int weight() const { return exps[0] + exps[2] - exps[1] - exps[3]; }

  std::uint64_t key() const {
    return (std::uint64_t(exps[0]) << 40) | (std::uint64_t(exps[1]) << 32) | (std::uint64_t(exps[2]) << 24) |
           (std::uint64_t(exps[3]) << 16) | (std::uint64_t(group.kind) << 8) | std::uint64_t(group.p);
  }
  static NormalWord from_key(std::uint64_t k);

  friend bool operator==(const NormalWord& a, const NormalWord& b) { return a.key() == b.key(); }
  friend bool operator<(const NormalWord& a, const NormalWord& b) { return a.key() < b.key(); }
};

std::string to_string(const NormalWord& w);

class Algebra;

/// Finite combination of normal words of one algebra H_{1,nu}(I_2(n)).
/// Zero coefficients are never stored.
template <typename Scalar>
class Element {
public:
  using Terms = std::map<NormalWord, Scalar>;

  Element() = default;
  explicit Element(const Algebra& alg) : alg_(&alg) {}
  Element(const Algebra& alg, const NormalWord& w, Scalar c) : alg_(&alg) { add(w, std::move(c)); }

  const Algebra& algebra() const { return *alg_; }
  const Algebra* algebra_ptr() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const NormalWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(const NormalWord& w, const Scalar& c) {
    if (::sra::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (::sra::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Maximum generator degree; -1 for the zero element.
  int degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
  }

  /// 0 or 1 when all terms share a parity, -1 when inhomogeneous or zero.
  int parity() const {
    int p = -2;
    for (const auto& [w, c] : terms_) {
      if (p == -2) p = w.parity();
      else if (p != w.parity()) return -1;
    }
    return p == -2 ? -1 : p;
  }

  Element& operator+=(const Element& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  template <typename S>
  Element& operator*=(const S& s) {
    if (::sra::is_zero(Scalar(s))) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c = c * s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& [w, c] : a.terms_) c = -c;
    return a;
  }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Converts the coefficient type (e.g. Rational -> Cyclo).
  template <typename To>
  Element<To> cast() const {
    Element<To> r(*alg_);
    for (const auto& [w, c] : terms_) r.add(w, To(c));
    return r;
  }

private:
  void adopt(const Element& o);

  const Algebra* alg_ = nullptr;
  Terms terms_;
};

using RElement = Element<Rational>;
using CElement = Element<Cyclo>;

/// H = H_{1,nu}(I_2(n)) with n odd and mu = n nu.
///
/// Relations, with eps^{01} = 1:
///   [a^al, b^be] = eps^{al be}(1 + mu L_0), [a^al, a^be] = eps^{al be} mu L_1,
///   [b^al, b^be] = eps^{al be} mu L_{-1},
///   L_p a = -b L_{p+1}, L_p b = -a L_{p-1}, Q_p a = a Q_{p+1}, Q_p b = b Q_{p-1}.
/// All relations are rational in the {L, Q} basis, so word products are
/// computed over Q and cached. Not safe for concurrent mutation of the cache;
/// use one Algebra per thread.
class Algebra {
public:
  Algebra(int n, Rational nu);

  int n() const { return n_; }
  const Rational& nu() const { return nu_; }
  const Rational& mu() const { return mu_; }
  const FieldContext& field() const { return field_; }

  using Terms = std::vector<std::pair<NormalWord, Rational>>;

  /// Normal form of the product of two normal words.
  Terms word_mul(const NormalWord& x, const NormalWord& y);

  template <typename Scalar>
  Element<Scalar> mul(const Element<Scalar>& x, const Element<Scalar>& y);

  /// Normal form of x * (word).
  RElement letter_times(Letter x, const NormalWord& w);
  /// Normal form of g * (word) for a group basis element g.
  RElement group_times(LQ g, const NormalWord& w);

  /// [x, y] for letters, as (unit coefficient, L coefficient, L index).
  struct Commutator {
    Rational unit;
    Rational l_coeff;
    int l_index;
  };
  Commutator commutator(Letter x, Letter y) const;

  RElement generator(Letter x);
  RElement group_element(LQ g);
  /// S_0 = sum_p Q_p.
  RElement one();
  CElement group_word(GroupWord w);

  /// Normal form of an arbitrary free word: a sequence of letters and group
  /// basis elements, multiplied left to right.
  struct Token {
    bool is_letter;
    Letter letter;
    LQ group;
  };
  RElement rewrite(const std::vector<Token>& word);

  /// 4i s = sum eps_{al be}({a^al,b^be} - {b^al,a^be}), i.e. the singlet is
  /// (1/4i) times this rational element.
  const RElement& singlet_core();
  /// The scalar 1/(4i).
  Cyclo singlet_scale() const;
  /// The singlet s as an element with cyclotomic coefficients.
  CElement singlet();
  /// T^{al be} = (1/2)({a^al, b^be} + {b^al, a^be}).
  RElement T(int alpha, int beta);

  std::size_t cache_size() const { return letter_cache_.size() + group_cache_.size(); }

  /// acc += c * (x * w), acc += c * (g * w).
  void letter_times_into(RElement& acc, Letter x, const NormalWord& w, const Rational& c);
  void group_times_into(RElement& acc, LQ g, const NormalWord& w, const Rational& c);
  RElement letter_times_element(Letter x, const RElement& e);

private:
  using Cached = Terms;
  static Cached freeze(const RElement& e);
  static void add_scaled(RElement& acc, const Cached& terms, const Rational& c);
  const Cached& letter_product(Letter x, const NormalWord& w);
  const Cached& reflection_product(LQ g, const NormalWord& w);

  int n_;
  Rational nu_;
  Rational mu_;
  FieldContext field_;
  std::unordered_map<std::uint64_t, Cached> letter_cache_;
  std::unordered_map<std::uint64_t, Cached> group_cache_;
  RElement singlet_core_;
  bool singlet_built_ = false;
};

/// Thrown when elements of different algebras are combined.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename Scalar>
void Element<Scalar>::adopt(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  else if (o.alg_ && o.alg_ != alg_ &&
           (o.alg_->n() != alg_->n() || o.alg_->nu() != alg_->nu()))
    throw UsageError("elements belong to algebras with different (n, nu)");
}

template <typename Scalar>
Element<Scalar> Algebra::mul(const Element<Scalar>& x, const Element<Scalar>& y) {
  for (const Algebra* a : {x.algebra_ptr(), y.algebra_ptr()})
    if (a && (a->n() != n_ || a->nu() != nu_))
      throw UsageError("multiplying elements of algebras with different (n, nu)");
  Element<Scalar> r(*this);
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      const Scalar c = cx * cy;
      for (const auto& [w, k] : word_mul(wx, wy)) r.add(w, c * k);
    }
  return r;
}

template <typename Scalar>
std::string to_string(const Element<Scalar>& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")" + to_string(w);
  }
  return s;
}

/// Parses expressions such as "2 a0 b1 L1 - 1/3 (a1 + i b0) S2".
/// Tokens: a0 a1 b0 b1, L<p> Q<p> R<k> S<k>, s (singlet), i, lam (lambda),
/// zeta, rationals p/q, parentheses, + - *, and ^<int> powers.
CElement parse_element(Algebra& alg, const std::string& text);

}  // namespace sra
