#include "sra/genfun.hpp"

#include <algorithm>

namespace sra {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, const Cyclo& c) {
  LaurentPoly f;
  f.add(exponent, c);
  return f;
}

Cyclo LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Cyclo() : it->second;
}

void LaurentPoly::add(int exponent, const Cyclo& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw ArithmeticError("min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw ArithmeticError("max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : o.terms_) r.add(e + f, c * d);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Cyclo& s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add(e, c * s);
  return r;
}

LaurentPoly LaurentPoly::euler() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add(e, c * Rational(e));
  return r;
}

LaurentPoly LaurentPoly::reflect() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add(-e, c);
  return r;
}

Cyclo LaurentPoly::operator()(const Cyclo& y) const {
  Cyclo v;
  if (terms_.empty()) return v;
  const Cyclo yinv = Cyclo(1) / y;
  for (const auto& [e, c] : terms_) {
    Cyclo pw(1);
    const Cyclo& base = e >= 0 ? y : yinv;
    for (int j = 0; j < std::abs(e); ++j) pw *= base;
    v += c * pw;
  }
  return v;
}

LaurentPoly LaurentPoly::divide_by_square(const Cyclo& root) const {
  if (terms_.empty()) return {};
  const int lo = min_exponent();
  const int hi = max_exponent();
  // Dense coefficients of y^-lo f, highest degree first.
  std::vector<Cyclo> a;
  for (int e = hi; e >= lo; --e) a.push_back(coeff(e));
  for (int pass = 0; pass < 2; ++pass) {
    if (a.size() < 2) throw ArithmeticError("pole at y = " + to_string(root) + " does not cancel");
    std::vector<Cyclo> q(a.size() - 1);
    Cyclo carry;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      carry = a[i] + carry * root;
      q[i] = carry;
    }
    if (!(a.back() + carry * root).is_zero())
      throw ArithmeticError("pole at y = " + to_string(root) + " does not cancel");
    a = std::move(q);
  }
  LaurentPoly r;
  const int top = hi - 2;
  for (std::size_t i = 0; i < a.size(); ++i) r.add(top - static_cast<int>(i), a[i]);
  return r;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(it->second) + ")";
    if (it->first != 0) s += "*y^" + std::to_string(it->first);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Generating functions

namespace {

Cyclo sign_power(int kappa, long e) { return Cyclo((kappa == -1 && (e % 2 != 0)) ? -1 : 1); }

LaurentPoly y_pow(int e, const Cyclo& c = Cyclo(1)) { return LaurentPoly::monomial(e, c); }

}  // namespace

Cyclo GenFunSet::beta(int k, int l) const { return G.at(mod_n(k, n)).coeff(l) * sign_power(kappa, mu); }

Cyclo GenFunSet::alpha(int p, int l) const { return F.at(mod_n(p, n)).coeff(l) * sign_power(kappa, mu); }

GenFunSet solve_Gk(const KappaTrace& sp) {
  require_odd_n(sp.n);
  const int n = sp.n;
  const Rational mu_q = sp.mu();
  if (mu_q.get_den() != 1)
    throw ConfigError("closed-form generating functions need mu = n nu integral (got mu = " + to_string(mu_q) + ")");
  if (!mu_q.get_num().fits_sint_p()) throw ConfigError("mu out of range");
  const long mu_signed = mu_q.get_num().get_si();
  if (mu_signed % n == 0) throw ConfigError("closed-form generating functions need mu outside nZ");
  if (std::abs(mu_signed) > 10000) throw ConfigError("mu too large");

  const GroupValues gv = group_values(sp);
  const FieldContext F(n);
  GenFunSet g;
  g.n = n;
  g.kappa = sp.kappa;
  g.mu = static_cast<int>(std::abs(mu_signed));
  g.folded = mu_signed < 0;
  g.tau = gv.x_or_y;
  g.sp_L0 = g.folded ? -gv.L[0] : gv.L[0];
  g.sp_S = gv.S;

  const int mu = g.mu;
  const int kappa = g.kappa;
  const Cyclo km = sign_power(kappa, mu);
  const LaurentPoly sym = (y_pow(mu, km) + y_pow(-mu, km)) - y_pow(0, Cyclo(2));
  const LaurentPoly anti = y_pow(mu, km) - y_pow(-mu, km);

  for (int k = 0; k < n; ++k) {
    const Cyclo lk = F.lambda(k);
    const Cyclo lmk = F.lambda(-k);
    const LaurentPoly lin = y_pow(0, lk) - y_pow(1);  // lambda^k - y
    LaurentPoly gk = (sym * Cyclo(Rational(1, mu)) + lin * anti * lmk) * g.sp_L0;
    const Cyclo d = Cyclo(kappa) - lk;
    gk.add(0, Cyclo(kappa) * lmk * d * d * g.sp_S[k]);
    g.G.push_back((y_pow(1, lk) * gk).divide_by_square(lk));
  }
  for (int p = 0; p < n; ++p) {
    LaurentPoly fp;
    for (int k = 0; k < n; ++k) fp = fp + g.G[k] * F.lambda(-static_cast<long>(k) * p);
    g.F.push_back(fp * Cyclo(Rational(1, n)));
  }
  return g;
}

std::vector<LaurentPoly> ode_residual(const GenFunSet& g) {
  const FieldContext F(g.n);
  const Cyclo i = F.i();
  const Cyclo km = sign_power(g.kappa, g.mu);
  std::vector<LaurentPoly> out;
  for (int k = 0; k < g.n; ++k) {
    const Cyclo lk = F.lambda(k);
    const LaurentPoly& G = g.G[k];
    const LaurentPoly dG = G.euler() * i;  // d/dt
    const LaurentPoly delta = (y_pow(g.mu + 1) - y_pow(1 - g.mu)) *
                              (Cyclo(g.kappa) * km * F.lambda(-k) * g.sp_L0 / (Cyclo(2) * i));
    const LaurentPoly d_delta = delta.euler() * i;
    LaurentPoly r = (y_pow(0, lk) - y_pow(1)) * dG - (y_pow(0, lk) + y_pow(1)) * G * i -
                    d_delta * (Cyclo(2) * i * Cyclo(g.kappa) * lk);
    r.add(0, G(Cyclo(g.kappa)) - g.sp_S[k]);
    out.push_back(r);
  }
  return out;
}

std::vector<Cyclo> moments_from_closed_form(const GenFunSet& g, int p, int s_max) {
  if (s_max < 0) throw ConfigError("s_max must be nonnegative");
  const FieldContext F(g.n);
  const Cyclo i = F.i();
  std::vector<Cyclo> out(s_max + 1);
  for (const auto& [l, c] : g.F.at(mod_n(p, g.n)).terms()) {
    // c = kappa^mu alpha_l; y^l at t contributes kappa^l e^{ilt}.
    Cyclo term = c * sign_power(g.kappa, l);
    const Cyclo il = i * Cyclo(l);
    for (int s = 0; s <= s_max; ++s) {
      out[s] += term;
      term *= il;
    }
  }
  return out;
}

std::vector<Cyclo> singlet_moments(const GenFunSet& g, int p, int s_max) {
  const std::vector<Cyclo> f = moments_from_closed_form(g, p, s_max);
  if (mod_n(p, g.n) != 0) return f;
  const FieldContext F(g.n);
  const Cyclo c = F.i() * Cyclo(g.mu);
  // x^s Q_0 = sum_j q_j s^j Q_0 + l_j s^j L_0 with x = s - i mu L_0.
  std::vector<Cyclo> q{Cyclo(1)}, l{Cyclo()};
  std::vector<Cyclo> m;
  for (int s = 0; s <= s_max; ++s) {
    Cyclo known = l[0] * g.sp_L0;
    for (int j = 0; j < s; ++j) known += q[j] * m[j];
    m.push_back(f[s] - known);
    std::vector<Cyclo> q2(s + 2), l2(s + 2);
    for (int j = 0; j <= s; ++j) {
      const Cyclo sgn = (j % 2 == 0) ? c : -c;
      q2[j + 1] += q[j];
      l2[j] -= sgn * q[j];
      l2[j + 1] += l[j];
      q2[j] -= sgn * l[j];
    }
    q = std::move(q2);
    l = std::move(l2);
  }
  return m;
}

Cyclo SingletSeries::a(int s) const {
  Cyclo v = s == 0 ? constant : Cyclo();
  for (const auto& [l, w] : terms) {
    Cyclo pw(1);
    const Cyclo base(static_cast<long>(mu) * mu - static_cast<long>(l) * l);
    for (int j = 0; j < s; ++j) pw *= base;
    v += w * pw;
  }
  return v;
}

SingletSeries singlet_series(const GenFunSet& g) {
  const int mu = g.mu;
  for (int l = 1; l < mu; ++l)
    if (g.alpha(0, l) != g.alpha(0, -l))
      throw InternalError("alpha^0 symmetry fails at l = " + std::to_string(l));
  if (!g.alpha(0, -mu).is_zero()) throw InternalError("alpha^0_{-mu} is nonzero");
  if (g.alpha(0, mu) - g.alpha(0, -mu) != -g.sp_L0) throw InternalError("alpha^0_mu - alpha^0_{-mu} != -sp(L_0)");

  SingletSeries out;
  out.mu = mu;
  out.constant = g.alpha(0, mu);
  const Cyclo km = sign_power(g.kappa, mu);
  // F_even pairs y^l with y^-l, so each 0 < l < mu carries alpha^0_l + alpha^0_-l.
  for (int l = 0; l < mu; ++l) {
    Cyclo w = km * sign_power(g.kappa, l) * g.alpha(0, l);
    if (l > 0) w *= Rational(2);
    out.terms.emplace_back(l, w);
  }
  return out;
}

std::vector<Cyclo> even_moments_operator(const GenFunSet& g, int s_max) {
  const LaurentPoly& f0 = g.F.at(0);
  const LaurentPoly even = (f0 + f0.reflect()) * Cyclo(Rational(1, 2));
  std::vector<Cyclo> out;
  LaurentPoly cur = even;
  const Cyclo mu2(static_cast<long>(g.mu) * g.mu);
  for (int s = 0; s <= s_max; ++s) {
    out.push_back(cur(Cyclo(g.kappa)));
    // d^2/dt^2 = -(y d/dy)^2.
    cur = cur * mu2 - cur.euler().euler();
  }
  return out;
}

NuClass classify_nu(int n, const Rational& nu) {
  require_odd_n(n);
  NuClass c;
  const Rational mu = nu * n;
  if (mu.get_den() == 1 && mu.get_num().fits_slong_p()) {
    const long z = mu.get_num().get_si();
    if (z % n != 0) {
      c.trace_z = true;
      c.z = z;
    }
  }
  const Rational shifted = nu - Rational(1, 2);
  if (shifted.get_den() == 1 && shifted.get_num().fits_slong_p()) {
    c.supertrace_half = true;
    c.z = shifted.get_num().get_si();
  }
  return c;
}

std::string to_string(const NuClass& c) {
  if (c.trace_z) return "degenerate tr_z and str_z, z = " + std::to_string(c.z);
  if (c.supertrace_half) return "degenerate str_1/2, z = " + std::to_string(c.z);
  return "none known";
}

bool degeneracy_form_check(const GenFunSet& g) {
  if (static_cast<int>(g.G.size()) != g.n || static_cast<int>(g.F.size()) != g.n) return false;
  for (const auto& f : g.F)
    if (!f.is_zero() && (f.min_exponent() < -g.mu || f.max_exponent() > g.mu)) return false;
  for (const auto& f : g.G)
    if (!f.is_zero() && (f.min_exponent() < 1 - g.mu || f.max_exponent() > g.mu)) return false;
  return true;
}

bool same_coefficients(const GenFunSet& a, const GenFunSet& b) {
  if (a.n != b.n || a.mu != b.mu) return false;
  for (int k = 0; k < a.n; ++k)
    for (int l = -a.mu; l <= a.mu; ++l)
      if (a.beta(k, l) != b.beta(k, l) || a.alpha(k, l) != b.alpha(k, l)) return false;
  return true;
}

}  // namespace sra
