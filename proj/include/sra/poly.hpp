#pragma once

#include "sra/exactnum.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace sra {

/// Dense univariate polynomial over an exact field, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Scalar& s) { return Poly(std::vector<Scalar>{s}); }
  /// x - root
  static Poly linear(const Scalar& root) { return Poly(std::vector<Scalar>{-root, Scalar(1)}); }
  static Poly monomial(int degree, const Scalar& s = Scalar(1)) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = s;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }

  Poly monic() const {
    if (is_zero()) throw ArithmeticError("monic of zero polynomial");
    Scalar inv = Scalar(1) / leading();
    Poly r = *this;
    for (auto& x : r.c_) x = x * inv;
    return r;
  }

  template <typename X>
  X operator()(const X& x) const {
    X acc = X(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + X(c_[i]);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Scalar& s, Poly p) {
    for (auto& x : p.c_) x = s * x;
    p.trim();
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; throws on zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    r = a;
    std::vector<Scalar> qc(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Scalar(0));
    const Scalar inv = Scalar(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      Scalar f = r.leading() * inv;
      qc[shift] = f;
      for (int j = 0; j <= b.degree(); ++j) r.c_[shift + j] -= f * b.c_[j];
      r.c_.pop_back();
      r.trim();
    }
    q = Poly(std::move(qc));
  }

  std::string str(const char* var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (is_zero(c_[i])) continue;
      if (!first) os << " + ";
      os << "(" << c_[i] << ")";
      if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return os.str();
  }

private:
  static bool is_zero(const Scalar& s) { return ::sra::is_zero(s); }
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

}  // namespace sra
