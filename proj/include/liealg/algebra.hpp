#pragma once

#include <functional>
#include <vector>

#include "liealg/echelon.hpp"

namespace liealg {

/// Finite-dimensional algebra given by structure constants on the basis
/// e_0..e_{n-1} (0-based here; documents and the CLI use 1-based indices).
/// Only [e_i, e_j] with i < j is stored; [e_j, e_i] is the negative. The
/// Jacobi identity is not enforced, see jacobi_check.
template <FieldScalar T>
class LieAlgebra {
 public:
  using value_type = T;

  LieAlgebra(int dim, FieldSpec field) : n_(dim), field_(field) {
    if (dim < 1) throw Error(ErrorCode::BadDimension, "dimension must be at least 1");
    ScalarTraits<T>::check_field(field);
    table_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  }

  int dim() const { return n_; }
  const FieldSpec& field() const { return field_; }

  /// Replaces [e_i, e_j]. i > j stores the negated terms under (j, i).
  void set_bracket(int i, int j, SparseVec<T> terms) {
    check_index(i);
    check_index(j);
    if (i == j) {
      if (!terms.empty()) throw Error(ErrorCode::IndexOutOfRange, "[e_i, e_i] must vanish");
      return;
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<T> clean;
    for (auto& [k, c] : terms) {
      check_index(k);
      if (!clean.empty() && clean.back().first == k)
        throw Error(ErrorCode::DuplicateBracket, "repeated target index in one bracket");
      check_scalar(c);
      if (!is_zero(c)) clean.emplace_back(k, i < j ? c : T(-c));
    }
    slot(std::min(i, j), std::max(i, j)) = std::move(clean);
  }

  /// Adds c * e_k to [e_i, e_j].
  void add_term(int i, int j, int k, const T& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) throw Error(ErrorCode::IndexOutOfRange, "[e_i, e_i] must vanish");
    check_scalar(c);
    if (is_zero(c)) return;
    const T signed_c = i < j ? c : T(-c);
    auto& row = slot(std::min(i, j), std::max(i, j));
    row = axpy_sparse(row, T(-1), SparseVec<T>{{k, signed_c}});
  }

  /// Stored terms of [e_i, e_j] for i < j.
  const SparseVec<T>& stored(int i, int j) const { return slot_const(i, j); }

  /// Signed terms of [e_i, e_j] for any i, j.
  SparseVec<T> bracket_basis(int i, int j) const {
    if (i == j) return {};
    if (i < j) return slot_const(i, j);
    SparseVec<T> out = slot_const(j, i);
    for (auto& [k, c] : out) c = -c;
    return out;
  }

  T structure_constant(int i, int j, int k) const {
    if (i == j) return zero<T>(field_);
    const auto& row = slot_const(std::min(i, j), std::max(i, j));
    for (const auto& [idx, c] : row)
      if (idx == k) return i < j ? c : T(-c);
    return zero<T>(field_);
  }

  /// Visits every nonzero stored bracket in (i, j) order.
  void for_each_bracket(const std::function<void(int, int, const SparseVec<T>&)>& f) const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const auto& row = slot_const(i, j);
        if (!row.empty()) f(i, j, row);
      }
  }

  int bracket_count() const {
    int count = 0;
    for_each_bracket([&](int, int, const SparseVec<T>&) { ++count; });
    return count;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.n_ != b.n_ || !(a.field_ == b.field_)) return false;
    for (int i = 0; i < a.n_; ++i)
      for (int j = i + 1; j < a.n_; ++j) {
        const auto& ra = a.slot_const(i, j);
        const auto& rb = b.slot_const(i, j);
        if (ra.size() != rb.size()) return false;
        for (std::size_t t = 0; t < ra.size(); ++t)
          if (ra[t].first != rb[t].first || !(ra[t].second == rb[t].second)) return false;
      }
    return true;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i + 1));
  }
  void check_scalar(const T& c) const {
    if constexpr (std::is_same_v<T, Fp>) {
      if (c.bound() && c.modulus() != field_.p) throw Error(ErrorCode::FieldMismatch, "coefficient field");
    }
  }
  SparseVec<T>& slot(int i, int j) { return table_[static_cast<std::size_t>(i * n_ + j)]; }
  const SparseVec<T>& slot_const(int i, int j) const {
    return table_[static_cast<std::size_t>(i * n_ + j)];
  }

  int n_;
  FieldSpec field_;
  std::vector<SparseVec<T>> table_;
};

template <FieldScalar T>
LieAlgebra<T> abelian(int n, const FieldSpec& field) {
  return LieAlgebra<T>(n, field);
}

/// [x, y] for coordinate vectors; bilinear antisymmetric extension of the table.
template <FieldScalar T>
Vector<T> bracket_eval(const LieAlgebra<T>& L, const Vector<T>& x, const Vector<T>& y) {
  const int n = L.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "element length");
  Vector<T> out = zero_vector<T>(n, L.field());
  L.for_each_bracket([&](int i, int j, const SparseVec<T>& terms) {
    const T c = x(i) * y(j) - x(j) * y(i);
    if (is_zero(c)) return;
    for (const auto& [k, v] : terms) out(k) += c * v;
  });
  return out;
}

/// ad(e_a) applied to a vector: [e_a, v].
template <FieldScalar T>
void add_ad_basis(const LieAlgebra<T>& L, int a, const Vector<T>& v, const T& scale, Vector<T>& acc) {
  for (int m = 0; m < L.dim(); ++m) {
    if (m == a || is_zero(v(m))) continue;
    const T c = scale * v(m);
    for (const auto& [k, s] : L.bracket_basis(a, m)) acc(k) += c * s;
  }
}

template <FieldScalar T>
struct JacobiViolation {
  int a, b, c;  // 0-based, a < b < c
  Vector<T> residual;
};

template <FieldScalar T>
struct JacobiReport {
  std::vector<JacobiViolation<T>> violations;
  bool passed() const { return violations.empty(); }
};

template <FieldScalar T>
Vector<T> jacobiator(const LieAlgebra<T>& L, int a, int b, int c) {
  const int n = L.dim();
  const FieldSpec& f = L.field();
  const T unit = one<T>(f);
  Vector<T> acc = zero_vector<T>(n, f);
  add_ad_basis(L, a, to_dense(L.bracket_basis(b, c), n, f), unit, acc);
  add_ad_basis(L, b, to_dense(L.bracket_basis(c, a), n, f), unit, acc);
  add_ad_basis(L, c, to_dense(L.bracket_basis(a, b), n, f), unit, acc);
  return acc;
}

/// J(e_a, e_b, e_c) for every a < b < c; violations listed in sorted order.
template <FieldScalar T>
JacobiReport<T> jacobi_check(const LieAlgebra<T>& L) {
  JacobiReport<T> report;
  const int n = L.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vector<T> r = jacobiator(L, a, b, c);
        if (!is_zero_vector(r)) report.violations.push_back({a, b, c, std::move(r)});
      }
  return report;
}

/// Early-exit variant for search loops.
template <FieldScalar T>
bool satisfies_jacobi(const LieAlgebra<T>& L) {
  const int n = L.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!is_zero_vector(jacobiator(L, a, b, c))) return false;
  return true;
}

}  // namespace liealg
