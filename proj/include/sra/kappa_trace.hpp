#pragma once

#include "sra/algebra.hpp"
#include "sra/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sra {

/// Raised when the commutator span at the requested truncation is too small
/// to pin down the functional (free columns above degree 0).
struct InsufficientSlack : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computed dimension or identity contradicts the theory in a
/// way that indicates a bug rather than a truncation effect.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Expected dimension of the space of kappa-traces: m = (n-1)/2 traces,
/// m + 1 supertraces.
int expected_trace_dimension(int n, int kappa);

/// A kappa-trace given by its free parameters: s_1..s_m (kappa = +1, the
/// values on S_k) or u_0..u_m (kappa = -1). s_{n-k} = s_k is implied.
struct KappaTrace {
  int n = 3;
  Rational nu;
  int kappa = 1;
  std::vector<Cyclo> params;

  Rational mu() const { return nu * n; }
  /// sp(S_k) for the folded index; S_0 for traces comes from the ground-level value.
  Cyclo s_value(int k) const;
};

/// Values of a kappa-trace on the group algebra, from the closed forms:
///   sp(R_k) = -(2 mu / n)((1+k)/2 X + (1-k)/2 Y),
///   X = sum_{r=1}^{n-1} sin^2(pi r/n) tr(S_r), Y = sum_{r=0}^{n-1} cos^2(pi r/n) str(S_r),
///   tr(S_0) = 2 nu^2 n X, sp(L_0) = sp(R_k), sp(L_p) = 0 for p != 0.
struct GroupValues {
  Cyclo x_or_y;            // X^{tr} or Y^{str}
  std::vector<Cyclo> R;    // sp(R_k)
  std::vector<Cyclo> S;    // sp(S_k)
  std::vector<Cyclo> L;    // sp(L_p)
  std::vector<Cyclo> Q;    // sp(Q_p)
};

GroupValues group_values(const KappaTrace& sp);

/// Theorem-level degenerate families on H_{1,nu}(I_2(n)).
struct DegenerateFamily {
  enum class Kind { TraceZ, SuperTraceZ, SuperTraceHalf };
  Kind kind;
  long z;          // nu = z/n for TraceZ/SuperTraceZ, nu = z + 1/2 for SuperTraceHalf
  Rational tau{1};

  Rational nu(int n) const;
  int kappa() const { return kind == Kind::TraceZ ? 1 : -1; }
};

std::string to_string(DegenerateFamily::Kind k);

/// tr_z(S_k) = tau/(n sin^2(pi k/n)) (1 - cos(2 pi k z/n)),
/// str_z(S_k) = tau/(n cos^2(pi k/n)) (1 - (-1)^z cos(2 pi k z/n)),
/// str_{1/2}(S_k) = tau/(n cos^2(pi k/n)).
KappaTrace degenerate_values(int n, const DegenerateFamily& fam);

/// Linear functional on H_{<=D}: its values on the free (non-pivot)
/// degree-0 columns of the commutator elimination.
struct Functional {
  std::map<NormalWord, Cyclo> free_values;
};

/// Exact construction of kappa-traces on the filtration H_{<=D} as the
/// annihilator of the span of kappa-commutators.
///
/// The span is generated by x w - kappa^{e(x)e(w)} w x for x in
/// {a0, a1, b0, b1, L_p, Q_p} and normal words w, with total degree up to
/// D + slack. Elimination runs per block of (weight, degree parity) with
/// columns ordered by degree, so pivot rows with leading degree <= D span the
/// intersection of the commutator span with H_{<=D}.
class TraceEngine {
public:
  TraceEngine(int n, Rational nu, int kappa, int degree, int slack = 2);

  Algebra& algebra() { return alg_; }
  int n() const { return alg_.n(); }
  int kappa() const { return kappa_; }
  int degree() const { return degree_; }
  int slack() const { return slack_; }

  /// Free columns of degree <= D over all blocks: a basis of the kappa-trace
  /// space on H_{<=D} (functional i is 1 on word i and 0 on the others).
  std::vector<NormalWord> trace_space_basis();
  int dimension() { return static_cast<int>(trace_space_basis().size()); }

  /// Functional matching sp(S_k) = values[k] for k in the given index set.
  Functional functional_from_group_values(const std::vector<std::pair<int, Cyclo>>& s_values);
  Functional functional(const KappaTrace& sp);

  Cyclo evaluate(const Functional& f, const CElement& x);
  Cyclo evaluate(const Functional& f, const RElement& x);
  /// Value of the basis functional concentrated on a free word.
  Cyclo evaluate_basis(const NormalWord& free_word, const RElement& x);

  /// Number of relation rows processed and pivots stored (diagnostics).
  std::size_t rows_processed() const { return rows_; }

private:
  struct Block {
    std::vector<NormalWord> cols;
    std::unordered_map<std::uint64_t, int> col_of;
    SparseEchelon<Rational> echelon;
  };
  using BlockKey = std::pair<int, int>;  // (weight, parity)

  Block& block(int weight, int parity);
  void build(Block& b, int weight, int parity);
  std::vector<NormalWord> words_of(int weight, int parity, int max_degree) const;
  SparseEchelon<Rational>::Row to_row(const Block& b, const RElement& e) const;

  Algebra alg_;
  int kappa_;
  int degree_;
  int slack_;
  std::map<BlockKey, std::unique_ptr<Block>> blocks_;
  std::size_t rows_ = 0;
};

/// Builds a TraceEngine and checks the solved dimension against the theory,
/// raising the slack (up to max_slack) while free columns above degree 0
/// remain. Throws InsufficientSlack if that does not settle it.
std::unique_ptr<TraceEngine> make_trace_engine(int n, const Rational& nu, int kappa, int degree, int slack = 2,
                                               int max_slack = 6);

/// Evaluates sp on x with an engine sized for x's degree.
class TraceEvaluator {
public:
  TraceEvaluator(KappaTrace sp, int degree, int slack = 2);
  const KappaTrace& trace() const { return sp_; }
  TraceEngine& engine() { return *engine_; }
  const Functional& functional() const { return functional_; }
  Cyclo operator()(const CElement& x) { return engine_->evaluate(functional_, x); }
  Cyclo operator()(const RElement& x) { return engine_->evaluate(functional_, x); }

private:
  KappaTrace sp_;
  std::unique_ptr<TraceEngine> engine_;
  Functional functional_;
};

}  // namespace sra
