#pragma once

#include "sra/eigen_support.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sra {

/// Reduced row echelon form computed exactly. Pivoting takes the first
/// nonzero entry in each column; magnitudes play no role over exact fields.
template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m, {}};
  auto& a = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c)
        if (!is_zero(a(row, c))) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Basis of {x : m x = 0}, one vector per column of the result.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Constant(m.cols(), static_cast<Eigen::Index>(free.size()), Scalar(0));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, free[k]);
  }
  return basis;
}

/// A solution of a x = b, or nullopt when inconsistent.
template <typename DA, typename DB>
std::optional<Vector<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = rref(aug);
  Vector<Scalar> x = Vector<Scalar>::Constant(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x(ech.pivots[r]) = ech.reduced(r, a.cols());
  }
  return x;
}

/// Incremental sparse row echelon over an exact field. Column ids are
/// ordered: the leading entry of a row is its largest column id. Rows are
/// stored with leading coefficient 1 and are only leading-reduced.
template <typename Scalar>
class SparseEchelon {
public:
  using Row = std::vector<std::pair<int, Scalar>>;  // ascending column ids

  /// Reduces the row against existing pivots and stores it if it survives.
  /// Returns the new pivot column or -1.
  int insert(Row row) {
    while (!row.empty()) {
      const int lead = row.back().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Scalar inv = Scalar(1) / row.back().second;
        for (auto& [c, v] : row) v = v * inv;
        pivots_.emplace(lead, std::move(row));
        return lead;
      }
      const Scalar f = row.back().second;
      row = axpy(row, it->second, f);
    }
    return -1;
  }

  bool has_pivot(int col) const { return pivots_.count(col) != 0; }
  std::size_t rank() const { return pivots_.size(); }

  /// Fully reduces a vector; the result is supported on non-pivot columns.
  template <typename V>
  std::map<int, V> reduce(std::map<int, V> v) const {
    if (v.empty()) return v;
    int bound = v.rbegin()->first;
    while (true) {
      auto it = v.upper_bound(bound);
      if (it == v.begin()) break;
      --it;
      const int col = it->first;
      auto p = pivots_.find(col);
      if (p != pivots_.end()) {
        const V f = it->second;
        v.erase(it);
        const auto& prow = p->second;
        for (std::size_t k = 0; k + 1 < prow.size(); ++k) {
          auto [jt, inserted] = v.try_emplace(prow[k].first, V(0));
          jt->second -= f * prow[k].second;
          if (is_zero(jt->second)) v.erase(jt);
        }
      }
      if (col == 0) break;
      bound = col - 1;
    }
    return v;
  }

private:
  // a - f * b where b has leading coefficient 1; drops the cancelled lead.
  static Row axpy(const Row& a, const Row& b, const Scalar& f) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(f * b[j].second));
        ++j;
      } else {
        Scalar v = a[i].second - f * b[j].second;
        if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::unordered_map<int, Row> pivots_;
};

}  // namespace sra
