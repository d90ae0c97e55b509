#pragma once

#include "sra/genfun.hpp"
#include "sra/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sra {

/// Brute-force and closed-form moments disagree.
struct MomentMismatch : std::runtime_error {
  int p, s;
  MomentMismatch(int p_, int s_, const std::string& what) : std::runtime_error(what), p(p_), s(s_) {}
};

/// The truncation J is too small for the annihilator to stabilize.
struct InsufficientTruncation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Provenance { BruteForce, ClosedForm, BothAgree };
std::string to_string(Provenance p);

/// m[p][s] = sp(s^s Q_p), s = 0..S, and l0 = sp(L_0).
/// sp(s^s L_p) = 0 for s >= 1 and sp(L_p) = 0 for p != 0 are structural.
struct MomentTable {
  int n = 3;
  int kappa = 1;
  Cyclo l0;
  std::vector<std::vector<Cyclo>> m;
  std::vector<std::vector<Provenance>> provenance;

  int max_power() const { return m.empty() ? -1 : static_cast<int>(m[0].size()) - 1; }
};

struct MomentOptions {
  int brute_force_cap = 6;  // brute force for s <= cap (engine degree 2 cap)
  bool closed_form = true;  // use the generating functions when mu is an integer outside nZ
  int slack = 2;
};

/// Throws MomentMismatch when both routes run and disagree, ConfigError when
/// s > cap is requested without an available closed form.
MomentTable build_moment_table(const KappaTrace& sp, int S, const MomentOptions& opt = {});

/// Index of the H0 basis element s^j g.
struct H0Index {
  LQ g;
  int j = 0;
};

/// Gram matrix of B(x, y) = sp(x y) on {s^j Q_p, s^j L_p : j <= J}.
/// Basis order: for p = 0..n-1, Q_p with j = 0..J; then L_p likewise.
struct H0Gram {
  int n = 3;
  int J = 0;
  Matrix<Cyclo> B;

  int size() const { return 2 * n * (J + 1); }
  int index(LQ g, int j) const;
  H0Index at(int i) const;
};

/// Requires max_power >= 2J (ConfigError otherwise).
H0Gram build_gram(const MomentTable& mt, int J);

/// Rank of the rows of B belonging to the given basis elements.
Eigen::Index rank_of(const H0Gram& gram, const std::vector<int>& rows);

/// Minimal monic g with g(s) g0 in the kernel of B, found as the first Gram
/// column of s^d g0 lying in the span of the earlier ones. Throws
/// InsufficientTruncation when no such d < J exists.
Poly<Cyclo> minimal_annihilator(const H0Gram& gram, LQ g0);

/// Predicted characteristic polynomials over the computed alpha support:
///   p != 0: prod (x - i l) over alpha^p_l != 0,
///   p == 0: x prod (x^2 - mu^2 + l^2) over 0 <= l < mu with alpha^0_l != 0.
Poly<Cyclo> predicted_annihilator(const GenFunSet& g, int p);

/// Element of H0 in the basis above.
struct H0Element {
  std::vector<std::pair<H0Index, Cyclo>> terms;
  static H0Element from_poly(const Poly<Cyclo>& f, LQ g);
};

/// sp(x f) = 0 for every truncated basis element f.
bool kernel_membership(const H0Gram& gram, const H0Element& x);

struct Witness {
  int p = 0;
  Poly<Cyclo> phi;         // kernel element phi(s) Q_p
  H0Index non_member;      // basis element with nonzero pairing
  bool phi_in_kernel = false;
  bool non_member_pairs = false;
};

std::vector<Witness> nonzero_ideal_witness(const H0Gram& gram, const std::vector<Poly<Cyclo>>& phis);

struct AnnihilatorEntry {
  int p = 0;
  Poly<Cyclo> phi_plus, phi_minus;        // from Q_p
  Poly<Cyclo> phi_L_plus, phi_L_minus;    // from L_{-p}
  Poly<Cyclo> predicted_plus, predicted_minus;
  bool equal = false;
  bool matches_prediction = false;
  bool q_equals_l = false;
};

struct AnnihilatorCertificate {
  int n = 3;
  long z = 1;
  int J = 0;
  Rational tau{1};
  std::vector<AnnihilatorEntry> entries;
  bool coefficients_coincide = false;  // alpha and beta tables agree for kappa = +-1
  std::vector<Witness> witnesses_plus, witnesses_minus;
  bool unit_outside_kernel = false;
  int provenance_counts[3] = {0, 0, 0};  // brute-force, closed-form, both-agree
  std::optional<int> first_mismatch;

  bool verdict_equal() const { return !first_mismatch.has_value(); }
  /// Equality plus every supporting identity (prediction, Q/L symmetry, witnesses).
  bool all_hold() const;
};

struct CoincideOptions {
  Rational tau{1};
  MomentOptions moments;
};

int default_truncation(int n, long z);

/// Builds tr_z and str_z, their moment tables at S = 2J and Gram matrices,
/// and compares the minimal annihilators for every p.
AnnihilatorCertificate coincide(int n, long z, int J, const CoincideOptions& opt = {});

/// Worker count from SRA_TRACE_THREADS (default: hardware concurrency, at least 1).
int thread_limit();

}  // namespace sra
