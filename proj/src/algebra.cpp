#include "sra/algebra.hpp"

#include <cctype>

namespace sra {

std::string to_string(Letter x) {
  static const char* names[] = {"a0", "a1", "b0", "b1"};
  return names[static_cast<int>(x)];
}

NormalWord NormalWord::from_key(std::uint64_t k) {
  NormalWord w;
  w.exps = {static_cast<std::uint8_t>(k >> 40), static_cast<std::uint8_t>(k >> 32),
            static_cast<std::uint8_t>(k >> 24), static_cast<std::uint8_t>(k >> 16)};
  w.group = {static_cast<LQ::Kind>((k >> 8) & 0xff), static_cast<int>(k & 0xff)};
  return w;
}

std::string to_string(const NormalWord& w) {
  std::string s;
  for (int l = 0; l < 4; ++l) {
    if (!w.exps[l]) continue;
    s += to_string(static_cast<Letter>(l));
    if (w.exps[l] > 1) s += "^" + std::to_string(w.exps[l]);
    s += " ";
  }
  return s + to_string(w.group);
}

namespace {

int eps(int alpha, int beta) {
  if (alpha == beta) return 0;
  return alpha == 0 ? 1 : -1;
}

int first_letter(const NormalWord& w) {
  for (int l = 0; l < 4; ++l)
    if (w.exps[l]) return l;
  return -1;
}

}  // namespace

Algebra::Algebra(int n, Rational nu) : n_(n), nu_(std::move(nu)), mu_(nu_ * n), field_(n) {
  if (n > 255) throw ConfigError("n too large for the word encoding");
}

Algebra::Commutator Algebra::commutator(Letter x, Letter y) const {
  const int ax = letter_alpha(x), ay = letter_alpha(y);
  const bool bx = letter_is_b(x), by = letter_is_b(y);
  if (!bx && by) {
    const int e = eps(ax, ay);
    return {Rational(e), Rational(e * mu_), 0};
  }
  if (bx && !by) {
    const int e = -eps(ay, ax);
    return {Rational(e), Rational(e * mu_), 0};
  }
  const int e = eps(ax, ay);
  return {Rational(0), Rational(e * mu_), bx ? -1 : 1};
}

Algebra::Cached Algebra::freeze(const RElement& e) { return Cached(e.terms().begin(), e.terms().end()); }

void Algebra::add_scaled(RElement& acc, const Cached& terms, const Rational& c) {
  for (const auto& [w, k] : terms) acc.add(w, c * k);
}

void Algebra::letter_times_into(RElement& acc, Letter x, const NormalWord& w, const Rational& c) {
  const int y = first_letter(w);
  if (y < 0 || static_cast<int>(x) <= y) {
    NormalWord r = w;
    if (r.exps[static_cast<int>(x)] == 255) throw ConfigError("word degree overflow");
    ++r.exps[static_cast<int>(x)];
    acc.add(r, c);
    return;
  }
  add_scaled(acc, letter_product(x, w), c);
}

const Algebra::Cached& Algebra::letter_product(Letter x, const NormalWord& w) {
  const std::uint64_t key = w.key() | (std::uint64_t(x) << 48);
  if (auto it = letter_cache_.find(key); it != letter_cache_.end()) return it->second;

  // x y w' = y (x w') + [x, y] w'  with y the leading letter of w, y < x.
  const Letter y = static_cast<Letter>(first_letter(w));
  NormalWord rest = w;
  --rest.exps[static_cast<int>(y)];

  RElement inner(*this);
  letter_times_into(inner, x, rest, Rational(1));
  RElement out(*this);
  for (const auto& [u, c] : inner.terms()) letter_times_into(out, y, u, c);

  const Commutator com = commutator(x, y);
  if (sgn(com.unit) != 0)
    for (int p = 0; p < n_; ++p) {
      // 1 = sum_q Q_q; Q_q applied to rest.
      group_times_into(out, {LQ::Kind::Q, p}, rest, com.unit);
    }
  if (sgn(com.l_coeff) != 0) group_times_into(out, {LQ::Kind::L, mod_n(com.l_index, n_)}, rest, com.l_coeff);

  return letter_cache_.emplace(key, freeze(out)).first->second;
}

void Algebra::group_times_into(RElement& acc, LQ g, const NormalWord& w, const Rational& c) {
  g.p = mod_n(g.p, n_);
  if (g.kind == LQ::Kind::Q) {
    // Q_p a = a Q_{p+1}, Q_p b = b Q_{p-1}.
    const int shift = w.exps[0] + w.exps[1] - w.exps[2] - w.exps[3];
    auto prod = lq_mul({LQ::Kind::Q, mod_n(g.p + shift, n_)}, w.group, n_);
    if (!prod) return;
    NormalWord r = w;
    r.group = *prod;
    acc.add(r, c);
    return;
  }
  add_scaled(acc, reflection_product(g, w), c);
}

const Algebra::Cached& Algebra::reflection_product(LQ g, const NormalWord& w) {
  const std::uint64_t key = w.key() | (std::uint64_t(g.p) << 48);
  if (auto it = group_cache_.find(key); it != group_cache_.end()) return it->second;

  // L_p a^al = -b^al L_{p+1}, L_p b^al = -a^al L_{p-1}: the letters swap a <-> b
  // and the final idempotent index shifts by #a - #b.
  const int shift = w.exps[0] + w.exps[1] - w.exps[2] - w.exps[3];
  const auto prod = lq_mul({LQ::Kind::L, mod_n(g.p + shift, n_)}, w.group, n_);
  RElement out(*this);
  if (prod) {
    RElement cur(*this);
    NormalWord base;
    base.group = *prod;
    cur.add(base, w.degree() % 2 ? Rational(-1) : Rational(1));
    // Apply swapped letters right to left: original order a0 a1 b0 b1 becomes b0 b1 a0 a1.
    static constexpr int swapped[4] = {2, 3, 0, 1};
    for (int l = 3; l >= 0; --l)
      for (int rep = 0; rep < w.exps[l]; ++rep) cur = letter_times_element(static_cast<Letter>(swapped[l]), cur);
    out = std::move(cur);
  }
  return group_cache_.emplace(key, freeze(out)).first->second;
}

RElement Algebra::letter_times_element(Letter x, const RElement& e) {
  RElement out(*this);
  for (const auto& [w, c] : e.terms()) letter_times_into(out, x, w, c);
  return out;
}

RElement Algebra::letter_times(Letter x, const NormalWord& w) {
  RElement out(*this);
  letter_times_into(out, x, w, Rational(1));
  return out;
}

RElement Algebra::group_times(LQ g, const NormalWord& w) {
  RElement out(*this);
  group_times_into(out, g, w, Rational(1));
  return out;
}

Algebra::Terms Algebra::word_mul(const NormalWord& x, const NormalWord& y) {
  RElement cur(*this);
  group_times_into(cur, x.group, y, Rational(1));
  for (int l = 3; l >= 0 && !cur.is_zero(); --l)
    for (int rep = 0; rep < x.exps[l]; ++rep) cur = letter_times_element(static_cast<Letter>(l), cur);
  return freeze(cur);
}

RElement Algebra::generator(Letter x) {
  RElement out(*this);
  for (int p = 0; p < n_; ++p) {
    NormalWord w;
    w.exps[static_cast<int>(x)] = 1;
    w.group = {LQ::Kind::Q, p};
    out.add(w, Rational(1));
  }
  return out;
}

RElement Algebra::group_element(LQ g) {
  NormalWord w;
  w.group = {g.kind, mod_n(g.p, n_)};
  return RElement(*this, w, Rational(1));
}

RElement Algebra::one() {
  RElement out(*this);
  for (int p = 0; p < n_; ++p) out += group_element({LQ::Kind::Q, p});
  return out;
}

CElement Algebra::group_word(GroupWord gw) {
  CElement out(*this);
  const auto ga = GroupAlgebraElement::from_word(field_, gw);
  for (const auto& [g, c] : ga.terms()) {
    NormalWord w;
    w.group = g;
    out.add(w, c);
  }
  return out;
}

RElement Algebra::rewrite(const std::vector<Token>& word) {
  RElement cur = one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->is_letter) {
      cur = letter_times_element(it->letter, cur);
    } else {
      RElement next(*this);
      for (const auto& [w, c] : cur.terms()) group_times_into(next, it->group, w, c);
      cur = std::move(next);
    }
  }
  return cur;
}

const RElement& Algebra::singlet_core() {
  if (!singlet_built_) {
    RElement acc(*this);
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be) {
        const int e = eps(al, be);  // lower-index tensor, eps_{01} = 1
        if (!e) continue;
        RElement a_al = generator(static_cast<Letter>(al)), b_be = generator(static_cast<Letter>(2 + be));
        RElement b_al = generator(static_cast<Letter>(2 + al)), a_be = generator(static_cast<Letter>(be));
        RElement term = mul(a_al, b_be) + mul(b_be, a_al) - mul(b_al, a_be) - mul(a_be, b_al);
        acc += Rational(e) * term;
      }
    singlet_core_ = std::move(acc);
    singlet_built_ = true;
  }
  return singlet_core_;
}

Cyclo Algebra::singlet_scale() const { return (field_.i() * Rational(4)).inverse(); }

CElement Algebra::singlet() {
  CElement s = singlet_core().cast<Cyclo>();
  s *= singlet_scale();
  return s;
}

RElement Algebra::T(int alpha, int beta) {
  RElement a_al = generator(static_cast<Letter>(alpha)), b_be = generator(static_cast<Letter>(2 + beta));
  RElement b_al = generator(static_cast<Letter>(2 + alpha)), a_be = generator(static_cast<Letter>(beta));
  RElement sum = mul(a_al, b_be) + mul(b_be, a_al) + mul(b_al, a_be) + mul(a_be, b_al);
  sum *= Rational(1, 2);
  return sum;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  Parser(Algebra& alg, const std::string& text) : alg_(alg), s_(text) {}

  CElement parse() {
    CElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  CElement scalar(const Cyclo& c) {
    CElement e = alg_.one().cast<Cyclo>();
    e *= c;
    return e;
  }

  CElement expr() {
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    CElement acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '*' || std::isalnum(static_cast<unsigned char>(c));
  }

  CElement term() {
    CElement acc = factor();
    while (at_factor_start()) {
      if (peek('*')) ++pos_;
      acc = alg_.mul(acc, factor());
    }
    return acc;
  }

  CElement factor() {
    CElement base = atom();
    if (peek('^')) {
      ++pos_;
      long e = integer();
      if (e < 0) fail("negative power");
      CElement r = alg_.one().cast<Cyclo>();
      for (long k = 0; k < e; ++k) r = alg_.mul(r, base);
      return r;
    }
    return base;
  }

  CElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CElement e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return scalar(Cyclo(parse_rational(s_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string word = s_.substr(start, pos_ - start);
    const auto& F = alg_.field();
    if (word == "i") return scalar(F.i());
    if (word == "lam") return scalar(F.lambda(1));
    if (word == "zeta") return scalar(F.zeta(1));
    if (word == "s") return alg_.singlet();
    if ((word == "a" || word == "b") && pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) {
      int idx = s_[pos_++] - '0';
      return alg_.generator(static_cast<Letter>((word == "b" ? 2 : 0) + idx)).cast<Cyclo>();
    }
    if (word == "L" || word == "Q" || word == "R" || word == "S") {
      long k = integer();
      if (word == "L") return alg_.group_element({LQ::Kind::L, mod_n(k, alg_.n())}).cast<Cyclo>();
      if (word == "Q") return alg_.group_element({LQ::Kind::Q, mod_n(k, alg_.n())}).cast<Cyclo>();
      auto kind = word == "R" ? GroupWord::Kind::Reflection : GroupWord::Kind::Rotation;
      return alg_.group_word({kind, mod_n(k, alg_.n())});
    }
    fail("unknown token '" + word + "'");
  }

  Algebra& alg_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

CElement parse_element(Algebra& alg, const std::string& text) { return Parser(alg, text).parse(); }

}  // namespace sra
