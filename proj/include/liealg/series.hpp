#pragma once

#include <optional>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// [U, V] = span{[u, v]} over the two echelon bases.
template <FieldScalar T>
Subspace<T> subspace_bracket(const LieAlgebra<T>& L, const Subspace<T>& U, const Subspace<T>& V) {
  const int n = L.dim();
  if (U.ambient_dim() != n || V.ambient_dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  EchelonBuilder<T> out(n, L.field());
  if (U.is_zero() || V.is_zero()) return out.finish();
  const auto us = U.vectors();
  const auto vs = V.vectors();
  for (std::size_t a = 0; a < us.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) {
      out.insert(bracket_eval(L, us[a], vs[b]));
      if (out.rank() == n) return out.finish();
    }
  return out.finish();
}

/// U^1 = [U, U], U^i = [U, U^{i-1}]. Terms are listed until one is zero
/// (included) or equals its predecessor (not repeated).
template <FieldScalar T>
std::vector<Subspace<T>> lower_central_series(const LieAlgebra<T>& L, const Subspace<T>& start) {
  std::vector<Subspace<T>> out;
  Subspace<T> prev = start;
  while (true) {
    Subspace<T> next = subspace_bracket(L, start, prev);
    if (next == prev) break;
    out.push_back(next);
    if (next.is_zero()) break;
    prev = std::move(next);
  }
  return out;
}

template <FieldScalar T>
std::vector<Subspace<T>> lower_central_series(const LieAlgebra<T>& L) {
  return lower_central_series(L, Subspace<T>::full(L.dim(), L.field()));
}

/// U^(1) = [U, U], U^(i) = [U^(i-1), U^(i-1)], same termination as above.
template <FieldScalar T>
std::vector<Subspace<T>> derived_series(const LieAlgebra<T>& L, const Subspace<T>& start) {
  std::vector<Subspace<T>> out;
  Subspace<T> prev = start;
  while (true) {
    Subspace<T> next = subspace_bracket(L, prev, prev);
    if (next == prev) break;
    out.push_back(next);
    if (next.is_zero()) break;
    prev = std::move(next);
  }
  return out;
}

template <FieldScalar T>
std::vector<Subspace<T>> derived_series(const LieAlgebra<T>& L) {
  return derived_series(L, Subspace<T>::full(L.dim(), L.field()));
}

template <FieldScalar T>
std::vector<int> dims_of(const std::vector<Subspace<T>>& series) {
  std::vector<int> out;
  out.reserve(series.size());
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

/// Least k with the k-th term zero, given the dims of terms 1, 2, ...
/// A zero starting space has length 0.
inline std::optional<int> series_length(int start_dim, const std::vector<int>& dims) {
  if (start_dim == 0) return 0;
  if (!dims.empty() && dims.back() == 0) return static_cast<int>(dims.size());
  return std::nullopt;
}

struct InvariantsReport {
  int dim = 0;
  std::vector<int> lower_central_dims;  // dim g^1, g^2, ... (ends in 0 when nilpotent)
  std::vector<int> derived_dims;        // dim g^(1), g^(2), ... (ends in 0 when solvable)
  std::optional<int> nilpotency_class;  // c(g), empty if not nilpotent
  std::optional<int> derived_length;    // d(g), empty if not solvable
  int generator_count = 0;              // dim g / g^(1)
  bool filiform = false;

  bool nilpotent() const { return nilpotency_class.has_value(); }
  bool solvable() const { return derived_length.has_value(); }

  /// (dim g/g^(1), dim g^(1)/g^(2), ..., dim g^(d-1)) for solvable g;
  /// empty otherwise.
  std::vector<int> derived_layers() const {
    std::vector<int> out;
    if (!solvable()) return out;
    int prev = dim;
    for (int d : derived_dims) {
      out.push_back(prev - d);
      prev = d;
    }
    return out;
  }
};

template <FieldScalar T>
InvariantsReport invariants(const LieAlgebra<T>& L) {
  InvariantsReport r;
  r.dim = L.dim();
  r.lower_central_dims = dims_of(lower_central_series(L));
  r.derived_dims = dims_of(derived_series(L));
  r.nilpotency_class = series_length(r.dim, r.lower_central_dims);
  r.derived_length = series_length(r.dim, r.derived_dims);
  r.generator_count = r.dim - (r.derived_dims.empty() ? r.dim : r.derived_dims.front());
  r.filiform = r.nilpotent() && *r.nilpotency_class == r.dim - 1;
  return r;
}

template <FieldScalar T>
bool is_subalgebra(const LieAlgebra<T>& L, const Subspace<T>& U) {
  if (U.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  return U.contains(subspace_bracket(L, U, U));
}

template <FieldScalar T>
bool is_ideal(const LieAlgebra<T>& L, const Subspace<T>& U) {
  if (U.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  return U.contains(subspace_bracket(L, Subspace<T>::full(L.dim(), L.field()), U));
}

/// Known values and bounds for the minimal dimensions alpha(k) (nilpotent)
/// and beta(k) (solvable) of algebras of derived length k in characteristic 0.
struct BoundsTable {
  static constexpr std::optional<int> alpha_known(int k) {
    switch (k) {
      case 1: return 1;
      case 2: return 3;
      case 3: return 6;
      default: return std::nullopt;
    }
  }
  /// alpha(4) is only pinned to {13, 14}; the 14-dimensional witness is g14.
  static constexpr int alpha4_witness_dim = 14;
  static constexpr std::optional<int> beta_known(int k) {
    switch (k) {
      case 1: return 1;
      case 2: return 2;
      case 3: return 4;
      case 4: return 7;
      default: return std::nullopt;
    }
  }
  /// Lower bound 2^{k-1} + 2k - 3 for nilpotent algebras, valid for k >= 4.
  static constexpr int bokut_lower_bound(int k) { return (1 << (k - 1)) + 2 * k - 3; }
  /// Upper bound 2^k - 1 (realised by the f_{9/10} family), k >= 2.
  static constexpr int upper_bound(int k) { return (1 << k) - 1; }
};

}  // namespace liealg
