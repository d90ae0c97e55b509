#pragma once

#include "sra/kappa_trace.hpp"

#include <map>
#include <string>
#include <vector>

namespace sra {

/// Finite Laurent polynomial in y with cyclotomic coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, const Cyclo& c);

  const std::map<int, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyclo coeff(int exponent) const;
  void add(int exponent, const Cyclo& c);
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Cyclo& c) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// y d/dy.
  LaurentPoly euler() const;
  /// f(1/y).
  LaurentPoly reflect() const;
  Cyclo operator()(const Cyclo& y) const;
  /// Exact quotient by (y - root)^2; throws ArithmeticError on a remainder.
  LaurentPoly divide_by_square(const Cyclo& root) const;

private:
  std::map<int, Cyclo> terms_;
};

std::string to_string(const LaurentPoly& f);

/// Closed-form generating functions of a degenerate kappa-trace, in the
/// variable y = kappa e^{it}:
///   G_k = sp(exp(t(s - i mu L_0)) S_k) = kappa^mu sum beta^k_l y^l,
///   F_p = sp(exp(t(s - i mu L_0)) Q_p) = kappa^mu sum alpha^p_l y^l.
/// mu is folded to be positive (the G_k are even in mu).
struct GenFunSet {
  int n = 3;
  int mu = 1;
  int kappa = 1;
  bool folded = false;  // the input had mu < 0
  Cyclo tau;            // X for traces, Y for supertraces
  Cyclo sp_L0;          // value for the folded (positive) mu
  std::vector<Cyclo> sp_S;
  std::vector<LaurentPoly> G;
  std::vector<LaurentPoly> F;

  Cyclo beta(int k, int l) const;
  Cyclo alpha(int p, int l) const;
};

/// Builds G_k from
///   G_k = lambda^k y g_k / (y - lambda^k)^2,
///   g_k = [(kappa^mu (y^mu + y^-mu) - 2)/mu + lambda^-k (lambda^k - y) kappa^mu (y^mu - y^-mu)] sp(L_0)
///         + kappa lambda^-k (kappa - lambda^k)^2 sp(S_k),
/// and F_p by the inverse Fourier transform. Requires mu = n nu an integer
/// outside nZ; a pole that fails to cancel raises ArithmeticError.
GenFunSet solve_Gk(const KappaTrace& sp);

/// Residuals of the ODE system in y, multiplied through by (lambda^k - y):
///   (lambda^k - y) dG/dt - i (lambda^k + y) G_k - 2 i kappa lambda^k d/dt(e^{it} D_k) = 0
/// with d/dt = i y d/dy and e^{it} D_k = kappa^{mu+1} lambda^-k y (y^mu - y^-mu) sp(L_0) / (2i).
/// Also checks G_k(kappa) = sp(S_k) by returning the difference as a constant term.
std::vector<LaurentPoly> ode_residual(const GenFunSet& g);

/// d^s/dt^s F_p at t = 0 for s = 0..s_max: kappa^mu sum_l alpha^p_l kappa^l (i l)^s.
std::vector<Cyclo> moments_from_closed_form(const GenFunSet& g, int p, int s_max);

/// sp(s^j Q_p) for j = 0..s_max, derived from the F_p moments. For p = 0 the
/// L_0 admixture of (s - i mu L_0)^j Q_0 is removed using s L_0 = -L_0 s,
/// L_0 L_0 = Q_0, L_0 Q_0 = L_0 and sp(s^j L_0) = 0 for j >= 1.
std::vector<Cyclo> singlet_moments(const GenFunSet& g, int p, int s_max);

/// Even series sp(cosh(t s) Q_0) = constant + sum_l weight_l cosh(t sqrt(mu^2 - l^2)).
struct SingletSeries {
  int mu = 1;
  Cyclo constant;
  std::vector<std::pair<int, Cyclo>> terms;  // (l, weight), l = 0..mu-1

  /// a_{2s} = sp(s^{2s} Q_0).
  Cyclo a(int s) const;
};

/// Reads the series off the alpha^0 table and checks alpha^0_l = alpha^0_-l
/// (|l| < mu), alpha^0_-mu = 0 and alpha^0_mu - alpha^0_-mu = -sp(L_0).
/// Throws InternalError when those identities fail.
SingletSeries singlet_series(const GenFunSet& g);

/// a_{2s} = (d^2/dt^2 + mu^2)^s F_even at t = 0, F_even(y) = (F_0(y) + F_0(1/y))/2.
std::vector<Cyclo> even_moments_operator(const GenFunSet& g, int s_max);

/// Classification of nu for n odd.
struct NuClass {
  bool trace_z = false;         // tr_z and str_z, nu = z/n, z not in nZ
  bool supertrace_half = false; // str_{1/2}, nu = z + 1/2
  long z = 0;

  bool none_known() const { return !trace_z && !supertrace_half; }
};

NuClass classify_nu(int n, const Rational& nu);
std::string to_string(const NuClass& c);

/// True when every F_p is a finite exponential polynomial in t: the G_k were
/// obtained by exact division and the F_p are supported in [-mu, mu].
bool degeneracy_form_check(const GenFunSet& g);

/// Compares the beta and alpha tables of two sets (the kappa = +1 and
/// kappa = -1 families at equal z and tau).
bool same_coefficients(const GenFunSet& a, const GenFunSet& b);

}  // namespace sra
