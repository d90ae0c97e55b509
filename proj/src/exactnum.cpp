#include "sra/exactnum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace sra {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ConfigError("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw bad();
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

using IPoly = std::vector<Integer>;

void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
IPoly divide_monic(IPoly a, const IPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  IPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw ArithmeticError("cyclotomic construction: inexact division");
  return q;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int order) {
  if (order < 1) throw ConfigError("cyclotomic order must be positive");
  IPoly p(order + 1);
  p[0] = -1;
  p[order] = 1;
  for (int d = 1; d < order; ++d)
    if (order % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

CycloField::CycloField(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {}

std::shared_ptr<const CycloField> CycloField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const CycloField>(order);
  return slot;
}

void CycloField::reduce(std::vector<Integer>& c) const {
  const std::size_t d = phi_.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    Integer t = c[i];
    for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= t * phi_[j];
    c[i] = 0;
  }
  if (c.size() > d) c.resize(d);
}

Cyclo::Cyclo(const Rational& q) : den_(q.get_den()) {
  if (sgn(q) != 0) num_.push_back(q.get_num());
  else den_ = 1;
}

Cyclo::Cyclo(std::shared_ptr<const CycloField> field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ArithmeticError("zero denominator");
  if (field_) field_->reduce(num_);
  else if (num_.size() > 1) {
    trim(num_);
    if (num_.size() > 1) throw ConfigError("non-rational coefficients need a field");
  }
  normalize();
}

Cyclo Cyclo::root(int order, long exponent) {
  if (order % 4 != 0 || (order / 4) % 2 == 0 || order / 4 < 3)
    throw ConfigError("cyclotomic order must be 4n with n odd >= 3, got " + std::to_string(order));
  return root(CycloField::get(order), exponent);
}

Cyclo Cyclo::root(const std::shared_ptr<const CycloField>& field, long exponent) {
  const long N = field->order();
  long e = ((exponent % N) + N) % N;
  std::vector<Integer> num(e + 1);
  num[e] = 1;
  return Cyclo(field, std::move(num), Integer(1));
}

void Cyclo::normalize() {
  trim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  Integer g = den_;
  for (const auto& x : num_) {
    if (g == 1) break;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1) {
    for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void Cyclo::adopt_field(const Cyclo& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
  } else if (field_ != o.field_ && field_->order() != o.field_->order()) {
    throw ConfigError("mixing cyclotomic numbers of different order");
  }
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw ArithmeticError("cyclotomic number is not rational");
  if (num_.empty()) return Rational(0);
  Rational q(num_[0], den_);
  q.canonicalize();
  return q;
}

Rational Cyclo::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(num_.size())) return Rational(0);
  Rational q(num_[i], den_);
  q.canonicalize();
  return q;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  adopt_field(o);
  if (o.num_.empty()) return *this;
  if (num_.empty()) {
    num_ = o.num_;
    den_ = o.den_;
    return *this;
  }
  if (num_.size() < o.num_.size()) num_.resize(o.num_.size());
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (auto& x : num_) x *= o.den_;
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  adopt_field(o);
  if (num_.empty() || o.num_.empty()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  std::vector<Integer> r(num_.size() + o.num_.size() - 1);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j) r[i + j] += num_[i] * o.num_[j];
  }
  if (field_) field_->reduce(r);
  num_ = std::move(r);
  den_ *= o.den_;
  normalize();
  return *this;
}

Cyclo& Cyclo::operator*=(const Rational& q) {
  if (sgn(q) == 0 || num_.empty()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  for (auto& x : num_) x *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

Cyclo Cyclo::inverse() const {
  if (num_.empty()) throw ArithmeticError("division by zero in Q(zeta)");
  if (is_rational()) {
    Cyclo r(Rational(den_, num_[0]));
    r.field_ = field_;
    return r;
  }
  // Extended Euclid: u * a + v * phi = g, g constant.
  QPoly a(num_.begin(), num_.end());
  QPoly phi(field_->modulus().begin(), field_->modulus().end());
  QPoly r0 = phi, r1 = a, s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw ArithmeticError("non-invertible element (modulus not irreducible?)");
  // s1 * a == r1[0] (mod phi); rescale by den/r1[0].
  Rational scale = Rational(den_) / r1[0];
  std::vector<Integer> num;
  Integer den = 1;
  for (auto& c : s1) {
    c *= scale;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (auto& c : s1) num.push_back(c.get_num() * (den / c.get_den()));
  return Cyclo(field_, std::move(num), den);
}

Cyclo Cyclo::conj() const {
  if (is_rational()) return *this;
  const int N = field_->order();
  std::vector<Integer> r(N);
  for (std::size_t i = 0; i < num_.size(); ++i) r[(N - static_cast<int>(i)) % N] += num_[i];
  return Cyclo(field_, std::move(r), den_);
}

std::pair<double, double> Cyclo::approx() const {
  double re = 0, im = 0;
  const double d = den_.get_d();
  const int N = order() ? order() : 1;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / N;
    double c = num_[i].get_d() / d;
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {re, im};
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.num_ != b.num_ || a.den_ != b.den_) return false;
  if (a.is_rational()) return true;
  return a.order() == b.order();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << to_string(c); }

std::string to_string(const Cyclo& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.numerators().size(); ++i) {
    Rational q = c.coeff(static_cast<int>(i));
    if (sgn(q) == 0) continue;
    if (!first) os << (sgn(q) > 0 ? " + " : " - ");
    else if (sgn(q) < 0) os << "-";
    Rational a = abs(q);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    first = false;
  }
  return os.str();
}

void require_odd_n(int n) {
  if (n < 3 || n % 2 == 0) throw ConfigError("n must be odd and >= 3, got " + std::to_string(n));
}

FieldContext::FieldContext(int n) : n_(n) {
  require_odd_n(n);
  field_ = CycloField::get(4 * n);
}

Cyclo FieldContext::embed(const Rational& q) const {
  Cyclo c(q);
  return c * Cyclo::root(field_, 0);
}

Cyclo FieldContext::cos2pi(long k) const { return (lambda(k) + lambda(-k)) * Rational(1, 2); }

Cyclo FieldContext::sin_sq(long k) const { return (embed(1) - cos2pi(k)) * Rational(1, 2); }

Cyclo FieldContext::cos_sq(long k) const { return (embed(1) + cos2pi(k)) * Rational(1, 2); }

}  // namespace sra
