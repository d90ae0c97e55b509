#pragma once

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sra {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for malformed configuration (bad field order, bad n, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised for arithmetic faults such as division by zero.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Integer coefficients, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int order);

/// Immutable data of Q(zeta_N): the modulus Phi_N and its degree.
class CycloField {
public:
  static std::shared_ptr<const CycloField> get(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<Integer>& modulus() const { return phi_; }

  /// Reduces an integer polynomial (any length) modulo Phi_N in place.
  void reduce(std::vector<Integer>& coeffs) const;

  explicit CycloField(int order);

private:
  int order_;
  std::vector<Integer> phi_;
};

/// Element of Q(zeta_N), N = 4n. Represented as (integer numerators in the
/// power basis) / (common positive denominator), reduced mod Phi_N, with
/// gcd(numerators, denominator) = 1 and trailing zero numerators trimmed.
///
/// A number without an attached field is a plain rational; it combines with
/// numbers of any order.
class Cyclo {
public:
  Cyclo() : den_(1) {}
  Cyclo(int v) : Cyclo(Rational(v)) {}
  Cyclo(long v) : Cyclo(Rational(v)) {}
  Cyclo(const Rational& q);
  Cyclo(std::shared_ptr<const CycloField> field, std::vector<Integer> num, Integer den);

  /// zeta_N^exponent with N = order; order must be 4n, n odd >= 3.
  static Cyclo root(int order, long exponent);
  static Cyclo root(const std::shared_ptr<const CycloField>& field, long exponent);

  const std::shared_ptr<const CycloField>& field() const { return field_; }
  int order() const { return field_ ? field_->order() : 0; }
  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return num_.size() <= 1; }
  /// Only valid when is_rational().
  Rational to_rational() const;
  /// Coefficient of zeta^i in the power basis.
  Rational coeff(int i) const;
  int degree_bound() const { return field_ ? field_->degree() : 1; }

  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const Rational& q);
  Cyclo& operator/=(const Cyclo& o);

  Cyclo inverse() const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  Cyclo conj() const;
  /// Numeric value, for human-readable rendering only.
  std::pair<double, double> approx() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const Rational& b) { return a *= b; }
  friend Cyclo operator*(const Rational& b, Cyclo a) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Cyclo& c);

private:
  void normalize();
  void adopt_field(const Cyclo& o);

  std::shared_ptr<const CycloField> field_;
  std::vector<Integer> num_;
  Integer den_;
};

std::string to_string(const Cyclo& c);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Cyclo& c) { return c.is_zero(); }

/// The field Q(zeta_{4n}) hosting lambda = zeta^4 = e^{2 pi i/n} and i = zeta^n.
class FieldContext {
public:
  explicit FieldContext(int n);

  int n() const { return n_; }
  int order() const { return 4 * n_; }
  const std::shared_ptr<const CycloField>& field() const { return field_; }

  Cyclo zeta(long e) const { return Cyclo::root(field_, e); }
  /// lambda^k, lambda = exp(2 pi i / n).
  Cyclo lambda(long k) const { return Cyclo::root(field_, 4 * k); }
  Cyclo i() const { return Cyclo::root(field_, n_); }
  Cyclo embed(const Rational& q) const;

  /// cos(2 pi k / n) = (lambda^k + lambda^-k) / 2.
  Cyclo cos2pi(long k) const;
  /// sin^2(pi k / n) = (1 - cos(2 pi k / n)) / 2.
  Cyclo sin_sq(long k) const;
  /// cos^2(pi k / n) = (1 + cos(2 pi k / n)) / 2.
  Cyclo cos_sq(long k) const;

private:
  int n_;
  std::shared_ptr<const CycloField> field_;
};

/// Checks n odd >= 3 and throws ConfigError otherwise.
void require_odd_n(int n);

}  // namespace sra
