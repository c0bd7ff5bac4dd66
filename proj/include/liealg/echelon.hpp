#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "liealg/field.hpp"

namespace liealg {

/// Sparse vector: (index, coefficient) pairs, strictly increasing indices,
/// no zero coefficients.
template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

template <FieldScalar T>
SparseVec<T> to_sparse(const Vector<T>& v) {
  SparseVec<T> out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
  return out;
}

template <FieldScalar T>
Vector<T> to_dense(const SparseVec<T>& v, int n, const FieldSpec& field) {
  Vector<T> out = zero_vector<T>(n, field);
  for (const auto& [i, c] : v) out(i) = c;
  return out;
}

/// a - factor * b, both sorted.
template <FieldScalar T>
SparseVec<T> axpy_sparse(const SparseVec<T>& a, const T& factor, const SparseVec<T>& b) {
  SparseVec<T> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -(factor * ib->second));
      ++ib;
    } else {
      T c = ia->second - factor * ib->second;
      if (!is_zero(c)) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

template <FieldScalar T>
class Subspace;

/// Incremental Gaussian elimination over sparse rows. Rows are kept in
/// semi-echelon form keyed by pivot column (leading coefficient 1); `finish`
/// back-substitutes into reduced row echelon form.
template <FieldScalar T>
class EchelonBuilder {
 public:
  EchelonBuilder(int cols, FieldSpec field) : cols_(cols), field_(field) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const FieldSpec& field() const { return field_; }

  /// Inserts a row; returns true if the rank grew.
  bool insert(SparseVec<T> row) {
    // Leading-term elimination only: once the lead has no pivot the row is new.
    while (!row.empty()) {
      auto it = rows_.find(row.front().first);
      if (it == rows_.end()) break;
      row = axpy_sparse(row, row.front().second, it->second);
    }
    if (row.empty()) return false;
    const T inv = row.front().second.inverse();
    for (auto& [i, c] : row) c *= inv;
    const int pivot = row.front().first;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  bool insert(const Vector<T>& v) { return insert(to_sparse(v)); }

  bool contains(SparseVec<T> row) const {
    while (!row.empty()) {
      auto it = rows_.find(row.front().first);
      if (it == rows_.end()) return false;
      row = axpy_sparse(row, row.front().second, it->second);
    }
    return true;
  }

  /// Reduced row echelon rows in increasing pivot order.
  std::vector<SparseVec<T>> reduced_rows() const {
    std::map<int, SparseVec<T>> done;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseVec<T> row = it->second;
      // Entries right of the pivot at other pivot columns are cleared with
      // rows that are already fully reduced.
      std::size_t pos = 1;
      while (pos < row.size()) {
        auto p = done.find(row[pos].first);
        if (p == done.end()) {
          ++pos;
          continue;
        }
        const T factor = row[pos].second;
        const int col = row[pos].first;
        row = axpy_sparse(row, factor, p->second);
        pos = static_cast<std::size_t>(
            std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; }) -
            row.begin());
      }
      done.emplace(it->first, std::move(row));
    }
    std::vector<SparseVec<T>> out;
    out.reserve(done.size());
    for (auto& [p, row] : done) out.push_back(std::move(row));
    return out;
  }

  Subspace<T> finish() const;

 private:
  int cols_;
  FieldSpec field_;
  std::map<int, SparseVec<T>> rows_;
};

/// Subspace of K^n in canonical form: reduced row echelon basis with
/// strictly increasing pivots normalised to 1. Structural equality is
/// subspace equality.
template <FieldScalar T>
class Subspace {
 public:
  Subspace(int ambient_dim, FieldSpec field)
      : ambient_(ambient_dim), field_(field), basis_(zero_matrix<T>(0, ambient_dim, field)) {}

  static Subspace zero(int n, const FieldSpec& field) { return Subspace(n, field); }

  static Subspace full(int n, const FieldSpec& field) {
    EchelonBuilder<T> b(n, field);
    for (int i = 0; i < n; ++i) b.insert(SparseVec<T>{{i, one<T>(field)}});
    return b.finish();
  }

  /// span{e_i : i in indices}, 0-based.
  static Subspace coordinate_span(int n, const std::vector<int>& indices, const FieldSpec& field) {
    EchelonBuilder<T> b(n, field);
    for (int i : indices) {
      if (i < 0 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "coordinate index");
      b.insert(SparseVec<T>{{i, one<T>(field)}});
    }
    return b.finish();
  }

  static Subspace span(const std::vector<Vector<T>>& vectors, int n, const FieldSpec& field) {
    EchelonBuilder<T> b(n, field);
    for (const auto& v : vectors) {
      if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "spanning vector length");
      b.insert(v);
    }
    return b.finish();
  }

  static Subspace from_reduced_rows(int n, const FieldSpec& field,
                                    const std::vector<SparseVec<T>>& rows) {
    Subspace s(n, field);
    s.basis_ = zero_matrix<T>(static_cast<int>(rows.size()), n, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      s.pivots_.push_back(rows[r].front().first);
      for (const auto& [i, c] : rows[r]) s.basis_(static_cast<Eigen::Index>(r), i) = c;
    }
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(pivots_.size()); }
  bool is_zero() const { return pivots_.empty(); }
  const FieldSpec& field() const { return field_; }
  const Matrix<T>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vector<T> row(int r) const { return basis_.row(r).transpose(); }

  std::vector<Vector<T>> vectors() const {
    std::vector<Vector<T>> out;
    for (int r = 0; r < dim(); ++r) out.push_back(row(r));
    return out;
  }

  /// RREF membership: subtract pivot multiples, then the remainder is zero iff contained.
  bool contains(const Vector<T>& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length");
    Vector<T> r = v;
    for (int k = 0; k < dim(); ++k) {
      const T c = r(pivots_[k]);
      if (liealg::is_zero(c)) continue;
      for (int j = 0; j < ambient_; ++j)
        if (!liealg::is_zero(basis_(k, j))) r(j) -= c * basis_(k, j);
    }
    return is_zero_vector(r);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions");
    if (other.dim() > dim()) return false;
    for (int r = 0; r < other.dim(); ++r)
      if (!contains(other.row(r))) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions");
    EchelonBuilder<T> builder(a.ambient_, a.field_);
    for (int r = 0; r < a.dim(); ++r) builder.insert(a.row(r));
    for (int r = 0; r < b.dim(); ++r) builder.insert(b.row(r));
    return builder.finish();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
    for (Eigen::Index i = 0; i < a.basis_.rows(); ++i)
      for (Eigen::Index j = 0; j < a.basis_.cols(); ++j)
        if (!(a.basis_(i, j) == b.basis_(i, j))) return false;
    return true;
  }

  /// Embeds into K^m (m >= n) by padding with zero coordinates at the end.
  Subspace embed(int m) const {
    if (m < ambient_) throw Error(ErrorCode::DimensionMismatch, "embedding into smaller space");
    std::vector<SparseVec<T>> rows;
    for (int r = 0; r < dim(); ++r) rows.push_back(to_sparse<T>(row(r)));
    return from_reduced_rows(m, field_, rows);
  }

 private:
  int ambient_;
  FieldSpec field_;
  Matrix<T> basis_;
  std::vector<int> pivots_;
};

template <FieldScalar T>
Subspace<T> EchelonBuilder<T>::finish() const {
  return Subspace<T>::from_reduced_rows(cols_, field_, reduced_rows());
}

/// Kernel of the linear map whose matrix rows are given, as a canonical subspace.
template <FieldScalar T>
Subspace<T> nullspace(const EchelonBuilder<T>& system) {
  const int n = system.cols();
  const FieldSpec& field = system.field();
  const auto rows = system.reduced_rows();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (const auto& r : rows) is_pivot[static_cast<std::size_t>(r.front().first)] = true;
  // For RREF rows, free column f yields x_f = 1, x_p = -R[p][f].
  EchelonBuilder<T> kernel(n, field);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    SparseVec<T> v;
    for (const auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), f,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it != r.end() && it->first == f) v.emplace_back(r.front().first, -it->second);
    }
    v.emplace_back(f, one<T>(field));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.insert(std::move(v));
  }
  return kernel.finish();
}

template <FieldScalar T>
int matrix_rank(const Matrix<T>& m, const FieldSpec& field) {
  EchelonBuilder<T> b(static_cast<int>(m.cols()), field);
  for (Eigen::Index r = 0; r < m.rows(); ++r) b.insert(Vector<T>(m.row(r).transpose()));
  return b.rank();
}

}  // namespace liealg
