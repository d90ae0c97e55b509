#include "sra/kappa_trace.hpp"

#include <algorithm>
#include <tuple>

namespace sra {

int expected_trace_dimension(int n, int kappa) {
  const int m = (n - 1) / 2;
  return kappa == 1 ? m : m + 1;
}

namespace {

int fold(int k, int n) {
  k = mod_n(k, n);
  return std::min(k, n - k);
}

void require_kappa(int kappa) {
  if (kappa != 1 && kappa != -1) throw ConfigError("kappa must be +1 or -1");
}

}  // namespace

// ---------------------------------------------------------------------------
// Closed-form group values

Cyclo KappaTrace::s_value(int k) const {
  const int f = fold(k, n);
  const FieldContext F(n);
  if (kappa == 1) {
    if (f == 0) {
      Cyclo x = F.embed(0);
      for (int r = 1; r < n; ++r) x += F.sin_sq(r) * s_value(r);
      return x * Rational(nu * nu * 2 * n);
    }
    return params.at(f - 1);
  }
  return params.at(f);
}

GroupValues group_values(const KappaTrace& sp) {
  require_kappa(sp.kappa);
  const int n = sp.n;
  const FieldContext F(n);
  const int m = (n - 1) / 2;
  if (static_cast<int>(sp.params.size()) != (sp.kappa == 1 ? m : m + 1))
    throw ConfigError("wrong number of kappa-trace parameters");

  GroupValues g;
  g.x_or_y = F.embed(0);
  if (sp.kappa == 1)
    for (int r = 1; r < n; ++r) g.x_or_y += F.sin_sq(r) * sp.s_value(r);
  else
    for (int r = 0; r < n; ++r) g.x_or_y += F.cos_sq(r) * sp.s_value(r);

  const Cyclo r_value = g.x_or_y * Rational(-2 * sp.mu() / n);
  g.R.assign(n, r_value);
  for (int k = 0; k < n; ++k) g.S.push_back(sp.s_value(k));
  g.L.assign(n, F.embed(0));
  g.L[0] = r_value;
  for (int p = 0; p < n; ++p) {
    Cyclo q = F.embed(0);
    for (int k = 0; k < n; ++k) q += F.lambda(-static_cast<long>(k) * p) * g.S[k];
    g.Q.push_back(q * Rational(1, n));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Degenerate families

Rational DegenerateFamily::nu(int n) const {
  if (kind == Kind::SuperTraceHalf) return Rational(2 * z + 1, 2);
  Rational q(z, n);
  q.canonicalize();
  return q;
}

std::string to_string(DegenerateFamily::Kind k) {
  switch (k) {
    case DegenerateFamily::Kind::TraceZ: return "tr_z";
    case DegenerateFamily::Kind::SuperTraceZ: return "str_z";
    case DegenerateFamily::Kind::SuperTraceHalf: return "str_1/2";
  }
  return "?";
}

KappaTrace degenerate_values(int n, const DegenerateFamily& fam) {
  require_odd_n(n);
  if (fam.kind != DegenerateFamily::Kind::SuperTraceHalf && fam.z % n == 0)
    throw ConfigError("degenerate family undefined for z in n*Z (z = " + std::to_string(fam.z) + ")");
  if (sgn(fam.tau) == 0) throw ConfigError("tau must be nonzero");
  const FieldContext F(n);
  const int m = (n - 1) / 2;
  KappaTrace sp{n, fam.nu(n), fam.kappa(), {}};
  const Rational scale = fam.tau / n;
  switch (fam.kind) {
    case DegenerateFamily::Kind::TraceZ:
      for (int k = 1; k <= m; ++k)
        sp.params.push_back((F.embed(1) - F.cos2pi(static_cast<long>(k) * fam.z)) / F.sin_sq(k) * scale);
      break;
    case DegenerateFamily::Kind::SuperTraceZ: {
      const Rational sign = (fam.z % 2 == 0) ? Rational(1) : Rational(-1);
      for (int k = 0; k <= m; ++k)
        sp.params.push_back((F.embed(1) - F.cos2pi(static_cast<long>(k) * fam.z) * sign) / F.cos_sq(k) * scale);
      break;
    }
    case DegenerateFamily::Kind::SuperTraceHalf:
      for (int k = 0; k <= m; ++k) sp.params.push_back(F.embed(1) / F.cos_sq(k) * scale);
      break;
  }
  return sp;
}

// ---------------------------------------------------------------------------
// Commutator-span engine

TraceEngine::TraceEngine(int n, Rational nu, int kappa, int degree, int slack)
    : alg_(n, std::move(nu)), kappa_(kappa), degree_(degree), slack_(slack) {
  require_kappa(kappa);
  if (degree < 0) throw ConfigError("degree cutoff must be nonnegative");
  if (slack < 0) throw ConfigError("slack must be nonnegative");
  if (degree + slack > 60) throw ConfigError("degree too large; raise limits");
}

std::vector<NormalWord> TraceEngine::words_of(int weight, int parity, int max_degree) const {
  std::vector<NormalWord> out;
  const int n = alg_.n();
  for (int e0 = 0; e0 <= max_degree; ++e0)
    for (int e1 = 0; e0 + e1 <= max_degree; ++e1)
      for (int e2 = 0; e0 + e1 + e2 <= max_degree; ++e2)
        for (int e3 = 0; e0 + e1 + e2 + e3 <= max_degree; ++e3) {
          if (e0 + e2 - e1 - e3 != weight || (e0 + e1 + e2 + e3) % 2 != parity) continue;
          for (int kind = 0; kind < 2; ++kind)
            for (int p = 0; p < n; ++p) {
              NormalWord w;
              w.exps = {static_cast<std::uint8_t>(e0), static_cast<std::uint8_t>(e1), static_cast<std::uint8_t>(e2),
                        static_cast<std::uint8_t>(e3)};
              w.group = {kind == 0 ? LQ::Kind::Q : LQ::Kind::L, p};
              out.push_back(w);
            }
        }
  // Column order: degree first; at equal degree L_p above Q_p so that the
  // Q_p stay free at degree 0.
  std::sort(out.begin(), out.end(), [](const NormalWord& a, const NormalWord& b) {
    return std::make_tuple(a.degree(), a.group.kind, a.group.p, a.key()) <
           std::make_tuple(b.degree(), b.group.kind, b.group.p, b.key());
  });
  return out;
}

SparseEchelon<Rational>::Row TraceEngine::to_row(const Block& b, const RElement& e) const {
  SparseEchelon<Rational>::Row row;
  row.reserve(e.size());
  for (const auto& [w, c] : e.terms()) {
    auto it = b.col_of.find(w.key());
    if (it == b.col_of.end()) throw InternalError("relation leaves its block: " + to_string(w));
    row.emplace_back(it->second, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

TraceEngine::Block& TraceEngine::block(int weight, int parity) {
  auto& slot = blocks_[{weight, parity}];
  if (!slot) {
    slot = std::make_unique<Block>();
    build(*slot, weight, parity);
  }
  return *slot;
}

void TraceEngine::build(Block& b, int weight, int parity) {
  const int dmax = degree_ + slack_;
  const int n = alg_.n();
  b.cols = words_of(weight, parity, dmax);
  for (int i = 0; i < static_cast<int>(b.cols.size()); ++i) b.col_of.emplace(b.cols[i].key(), i);

  struct Source {
    NormalWord u;
    int letter;  // -1: group basis element
    LQ g;
  };
  std::vector<Source> sources;
  for (int x = 0; x < 4; ++x) {
    const int wt = (x & 1) ? -1 : 1;
    for (const auto& u : words_of(weight - wt, 1 - parity, dmax - 1)) sources.push_back({u, x, {}});
  }
  for (const auto& u : b.cols)
    for (int kind = 0; kind < 2; ++kind)
      for (int p = 0; p < n; ++p) sources.push_back({u, -1, {kind ? LQ::Kind::L : LQ::Kind::Q, p}});
  std::stable_sort(sources.begin(), sources.end(),
                   [](const Source& a, const Source& c) { return a.u.degree() < c.u.degree(); });

  std::vector<SparseEchelon<Rational>::Row> rows;
  for (const auto& s : sources) {
    RElement r(alg_);
    if (s.letter >= 0) {
      const Letter x = static_cast<Letter>(s.letter);
      alg_.letter_times_into(r, x, s.u, Rational(1));
      // u x: only x Q_q with q matching the idempotent shift of u's group part survives.
      NormalWord xw;
      xw.exps[s.letter] = 1;
      xw.group = {LQ::Kind::Q, mod_n(s.u.group.p + (letter_is_b(x) ? -1 : 1), n)};
      const Rational sign = (kappa_ == -1 && s.u.parity() == 1) ? Rational(1) : Rational(-1);
      for (const auto& [w, c] : alg_.word_mul(s.u, xw)) r.add(w, sign * c);
    } else {
      alg_.group_times_into(r, s.g, s.u, Rational(1));
      if (auto hg = lq_mul(s.u.group, s.g, n)) {
        NormalWord w = s.u;
        w.group = *hg;
        r.add(w, Rational(-1));
      }
    }
    ++rows_;
    if (r.is_zero()) continue;
    rows.push_back(to_row(b, r));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.back().first, x.size()) < std::make_pair(y.back().first, y.size());
  });
  for (auto& row : rows) b.echelon.insert(std::move(row));
}

std::vector<NormalWord> TraceEngine::trace_space_basis() {
  const int dmax = degree_ + slack_;
  std::vector<NormalWord> out;
  for (int parity = 0; parity < 2; ++parity)
    for (int weight = -dmax; weight <= dmax; ++weight) {
      if ((weight - parity) % 2 != 0) continue;  // weight and degree share parity
      Block& b = block(weight, parity);
      for (int i = 0; i < static_cast<int>(b.cols.size()); ++i)
        if (b.cols[i].degree() <= degree_ && !b.echelon.has_pivot(i)) out.push_back(b.cols[i]);
    }
  return out;
}

Cyclo TraceEngine::evaluate_basis(const NormalWord& free_word, const RElement& x) {
  Functional f;
  f.free_values.emplace(free_word, alg_.field().embed(1));
  return evaluate(f, x);
}

Cyclo TraceEngine::evaluate(const Functional& f, const RElement& x) { return evaluate(f, x.cast<Cyclo>()); }

Cyclo TraceEngine::evaluate(const Functional& f, const CElement& x) {
  std::map<BlockKey, std::map<int, Cyclo>> parts;
  for (const auto& [w, c] : x.terms()) {
    if (w.degree() > degree_)
      throw ConfigError("element of degree " + std::to_string(w.degree()) + " outside the solved filtration H_{<=" +
                        std::to_string(degree_) + "}");
    Block& b = block(w.weight(), w.parity());
    parts[{w.weight(), w.parity()}].emplace(b.col_of.at(w.key()), c);
  }
  Cyclo value = alg_.field().embed(0);
  for (auto& [key, vec] : parts) {
    Block& b = block(key.first, key.second);
    for (const auto& [col, c] : b.echelon.reduce(std::move(vec))) {
      const NormalWord& w = b.cols[col];
      auto it = f.free_values.find(w);
      if (it != f.free_values.end()) {
        value += c * it->second;
      } else if (w.degree() > 0 || key != BlockKey{0, 0}) {
        throw InsufficientSlack("free column " + to_string(w) + " above degree 0; raise the commutator slack");
      }
    }
  }
  return value;
}

Functional TraceEngine::functional_from_group_values(const std::vector<std::pair<int, Cyclo>>& s_values) {
  const FieldContext& F = alg_.field();
  const int n = alg_.n();
  Block& b = block(0, 0);
  std::vector<NormalWord> free;
  for (int i = 0; i < static_cast<int>(b.cols.size()); ++i) {
    if (b.cols[i].degree() > degree_ || b.echelon.has_pivot(i)) continue;
    if (b.cols[i].degree() > 0)
      throw InsufficientSlack("free column " + to_string(b.cols[i]) + " above degree 0; raise the commutator slack");
    free.push_back(b.cols[i]);
  }
  // Reduced Q_p, expressed on the free columns.
  std::vector<std::map<int, Cyclo>> red(n);
  for (int p = 0; p < n; ++p) {
    NormalWord w;
    w.group = {LQ::Kind::Q, p};
    red[p] = b.echelon.reduce(std::map<int, Cyclo>{{b.col_of.at(w.key()), F.embed(1)}});
  }
  const auto nf = static_cast<Eigen::Index>(free.size());
  Matrix<Cyclo> a = Matrix<Cyclo>::Constant(static_cast<Eigen::Index>(s_values.size()), nf, F.embed(0));
  Vector<Cyclo> rhs(static_cast<Eigen::Index>(s_values.size()));
  for (std::size_t e = 0; e < s_values.size(); ++e) {
    const int k = s_values[e].first;
    rhs(e) = s_values[e].second;
    for (int p = 0; p < n; ++p)
      for (const auto& [col, c] : red[p]) {
        auto pos = std::find(free.begin(), free.end(), b.cols[col]) - free.begin();
        a(e, pos) += F.lambda(static_cast<long>(k) * p) * c;
      }
  }
  if (rank(a) != nf) throw InternalError("group values do not determine the functional");
  auto sol = solve(a, rhs);
  if (!sol) throw InternalError("group values are inconsistent with the kappa-commutator relations");
  Functional f;
  for (Eigen::Index i = 0; i < nf; ++i) f.free_values.emplace(free[i], (*sol)(i));
  return f;
}

Functional TraceEngine::functional(const KappaTrace& sp) {
  if (sp.n != alg_.n() || sp.nu != alg_.nu() || sp.kappa != kappa_)
    throw UsageError("kappa-trace parameters do not match the engine");
  std::vector<std::pair<int, Cyclo>> vals;
  for (int k = (kappa_ == 1 ? 1 : 0); k < alg_.n(); ++k) vals.emplace_back(k, sp.s_value(k));
  return functional_from_group_values(vals);
}

std::unique_ptr<TraceEngine> make_trace_engine(int n, const Rational& nu, int kappa, int degree, int slack,
                                               int max_slack) {
  require_odd_n(n);
  const int expected = expected_trace_dimension(n, kappa);
  for (int s = slack; s <= max_slack; ++s) {
    auto eng = std::make_unique<TraceEngine>(n, nu, kappa, degree, s);
    const auto basis = eng->trace_space_basis();
    const bool clean = std::all_of(basis.begin(), basis.end(), [](const NormalWord& w) { return w.degree() == 0; });
    const int dim = static_cast<int>(basis.size());
    if (clean && dim == expected) return eng;
    if (dim < expected)
      throw InternalError("trace space dimension " + std::to_string(dim) + " below the expected " +
                          std::to_string(expected));
  }
  throw InsufficientSlack("trace space dimension exceeds " + std::to_string(expected) +
                          " up to slack " + std::to_string(max_slack) + "; raise the commutator slack");
}

TraceEvaluator::TraceEvaluator(KappaTrace sp, int degree, int slack)
    : sp_(std::move(sp)), engine_(std::make_unique<TraceEngine>(sp_.n, sp_.nu, sp_.kappa, degree, slack)) {
  functional_ = engine_->functional(sp_);
}

}  // namespace sra
