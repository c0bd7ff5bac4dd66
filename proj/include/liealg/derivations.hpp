#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "liealg/series.hpp"

namespace liealg {

/// Derivations of L as a subspace of the n^2 matrix entries. Entry (a, b) of
/// D sits at coordinate a*n + b, with D e_b = sum_a D(a, b) e_a.
template <FieldScalar T>
struct DerivationSpace {
  int n = 0;
  Subspace<T> space;

  int dim() const { return space.dim(); }

  Matrix<T> matrix(int r) const {
    Matrix<T> D = zero_matrix<T>(n, n, space.field());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) D(a, b) = space.basis()(r, a * n + b);
    return D;
  }

  std::vector<Matrix<T>> basis() const {
    std::vector<Matrix<T>> out;
    for (int r = 0; r < dim(); ++r) out.push_back(matrix(r));
    return out;
  }

  bool contains(const Matrix<T>& D) const { return space.contains(flatten(D)); }

  static Vector<T> flatten(const Matrix<T>& D) {
    const auto n = D.rows();
    Vector<T> v(n * n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) v(a * n + b) = D(a, b);
    return v;
  }
};

template <FieldScalar T>
DerivationSpace<T> derivation_space(const LieAlgebra<T>& L) {
  const int n = L.dim();
  const FieldSpec& f = L.field();
  EchelonBuilder<T> system(n * n, f);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // Coordinate k of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j].
      std::vector<std::map<int, T>> rows(static_cast<std::size_t>(n));
      auto add = [&](int k, int var, const T& c) {
        auto [it, fresh] = rows[static_cast<std::size_t>(k)].try_emplace(var, c);
        if (!fresh) it->second += c;
      };
      for (const auto& [m, c] : L.stored(i, j))
        for (int k = 0; k < n; ++k) add(k, k * n + m, c);
      for (int a = 0; a < n; ++a) {
        for (const auto& [k, c] : L.bracket_basis(a, j)) add(k, a * n + i, T(-c));
        for (const auto& [k, c] : L.bracket_basis(i, a)) add(k, a * n + j, T(-c));
      }
      for (auto& row : rows) {
        SparseVec<T> sv;
        for (auto& [var, c] : row)
          if (!is_zero(c)) sv.emplace_back(var, std::move(c));
        if (!sv.empty()) system.insert(std::move(sv));
      }
    }
  return DerivationSpace<T>{n, nullspace(system)};
}

template <FieldScalar T>
bool is_derivation(const LieAlgebra<T>& L, const Matrix<T>& D) {
  const int n = L.dim();
  if (D.rows() != n || D.cols() != n) throw Error(ErrorCode::DimensionMismatch, "derivation must be n x n");
  const FieldSpec& f = L.field();
  std::vector<Vector<T>> image;
  for (int b = 0; b < n; ++b) image.push_back(D.col(b));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector<T> lhs = apply(D, to_dense(L.stored(i, j), n, f), f);
      Vector<T> rhs = bracket_eval(L, image[static_cast<std::size_t>(i)], basis_vector<T>(n, j, f)) +
                      bracket_eval(L, basis_vector<T>(n, i, f), image[static_cast<std::size_t>(j)]);
      if (!is_zero_vector(Vector<T>(lhs - rhs))) return false;
    }
  return true;
}

template <FieldScalar T>
Matrix<T> commutator(const Matrix<T>& A, const Matrix<T>& B, const FieldSpec& f) {
  return multiply(A, B, f) - multiply(B, A, f);
}

template <FieldScalar T>
bool is_nonsingular(const Matrix<T>& D, const FieldSpec& f) {
  return D.rows() == D.cols() && matrix_rank(D, f) == D.rows();
}

template <FieldScalar T>
Matrix<T> diagonal_matrix(const std::vector<std::int64_t>& weights, const FieldSpec& f) {
  const int n = static_cast<int>(weights.size());
  Matrix<T> D = zero_matrix<T>(n, n, f);
  for (int i = 0; i < n; ++i) D(i, i) = scalar_from_int<T>(weights[static_cast<std::size_t>(i)], f);
  return D;
}

/// Positive integer weights with w_i + w_j = w_k on every nonzero c_ij^k.
struct GradingWitness {
  std::vector<std::int64_t> weights;

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto w : weights) s += w;
    return s;
  }
};

/// The equations w_i + w_j - w_k = 0 over Q, one per nonzero structure constant.
template <FieldScalar T>
EchelonBuilder<Rational> grading_equations(const LieAlgebra<T>& L) {
  EchelonBuilder<Rational> eqs(L.dim(), FieldSpec::rationals());
  L.for_each_bracket([&](int i, int j, const SparseVec<T>& terms) {
    for (const auto& [k, c] : terms) {
      std::map<int, Rational> row;
      row[i] += Rational(1);
      row[j] += Rational(1);
      row[k] -= Rational(1);
      SparseVec<Rational> sv;
      for (auto& [var, v] : row)
        if (!v.is_zero()) sv.emplace_back(var, v);
      eqs.insert(std::move(sv));
    }
  });
  return eqs;
}

/// Scans positive integer values of the free weights by increasing free total;
/// pivot weights follow from the reduced equations. Returns the witness of
/// least total weight, ties broken lexicographically, with every weight in
/// [1, bound] (bound 0 means 4n).
template <FieldScalar T>
std::optional<GradingWitness> find_positive_grading(const LieAlgebra<T>& L, std::int64_t bound = 0) {
  const int n = L.dim();
  if (bound <= 0) bound = 4 * static_cast<std::int64_t>(n);
  const auto rows = grading_equations(L).reduced_rows();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (const auto& r : rows) is_pivot[static_cast<std::size_t>(r.front().first)] = true;
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (!is_pivot[static_cast<std::size_t>(v)]) free.push_back(v);
  for (const auto& r : rows)
    if (r.size() == 1) return std::nullopt;  // a weight forced to 0
  if (free.empty()) return std::nullopt;

  const int nf = static_cast<int>(free.size());
  std::optional<GradingWitness> best;
  std::vector<std::int64_t> vals(static_cast<std::size_t>(nf), 1);
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);

  auto try_point = [&] {
    for (int t = 0; t < nf; ++t) w[static_cast<std::size_t>(free[static_cast<std::size_t>(t)])] = vals[static_cast<std::size_t>(t)];
    for (const auto& r : rows) {
      Rational v;
      for (std::size_t e = 1; e < r.size(); ++e) v -= r[e].second * Rational(w[static_cast<std::size_t>(r[e].first)]);
      if (!v.is_integer() || v.sign() <= 0 || v > Rational(bound)) return;
      w[static_cast<std::size_t>(r.front().first)] = v.num().get_si();
    }
    GradingWitness cand{w};
    if (!best || cand.total() < best->total() || (cand.total() == best->total() && cand.weights < best->weights))
      best = std::move(cand);
  };

  // Compositions of `total` into nf parts in [1, bound], lexicographic.
  std::function<void(int, std::int64_t)> walk = [&](int pos, std::int64_t remaining) {
    if (pos == nf - 1) {
      if (remaining >= 1 && remaining <= bound) {
        vals[static_cast<std::size_t>(pos)] = remaining;
        try_point();
      }
      return;
    }
    const std::int64_t rest = nf - pos - 1;
    for (std::int64_t v = 1; v <= bound && remaining - v >= rest; ++v) {
      vals[static_cast<std::size_t>(pos)] = v;
      walk(pos + 1, remaining - v);
    }
  };

  for (std::int64_t total = nf; total <= nf * bound; ++total) {
    // Full totals exceed free totals, so nothing later can beat the best.
    if (best && total >= best->total()) break;
    walk(0, total);
  }
  return best;
}

/// n + 1 dimensional algebra with e_{n+1} acting as D: [e_{n+1}, y] = D y.
template <FieldScalar T>
LieAlgebra<T> semidirect_extend(const LieAlgebra<T>& N, const Matrix<T>& D) {
  if (!is_derivation(N, D)) throw Error(ErrorCode::NotADerivation, "matrix is not a derivation");
  const int n = N.dim();
  LieAlgebra<T> G(n + 1, N.field());
  N.for_each_bracket([&](int i, int j, const SparseVec<T>& terms) { G.set_bracket(i, j, terms); });
  for (int j = 0; j < n; ++j) {
    SparseVec<T> col;
    for (int a = 0; a < n; ++a)
      if (!is_zero(D(a, j))) col.emplace_back(a, T(-D(a, j)));
    G.set_bracket(j, n, std::move(col));
  }
  return G;
}

struct DecompositionReport {
  bool spans = false;
  bool a_subalgebra = false;
  bool b_subalgebra = false;
  bool a_is_ideal = false;
  bool b_is_ideal = false;
  std::optional<int> c_a;  // empty when A is not a nilpotent subalgebra
  std::optional<int> c_b;
  std::optional<int> d_g;
  bool estimate_holds = false;  // d(g) <= c(a) + c(b), all three defined
};

/// Nilpotency class of U as an algebra in its own right; needs U closed.
template <FieldScalar T>
std::optional<int> subalgebra_class(const LieAlgebra<T>& L, const Subspace<T>& U) {
  if (!is_subalgebra(L, U)) return std::nullopt;
  return series_length(U.dim(), dims_of(lower_central_series(L, U)));
}

template <FieldScalar T>
DecompositionReport decomposition_check(const LieAlgebra<T>& L, const Subspace<T>& A, const Subspace<T>& B) {
  if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  DecompositionReport r;
  r.spans = (A + B).dim() == L.dim();
  r.a_subalgebra = is_subalgebra(L, A);
  r.b_subalgebra = is_subalgebra(L, B);
  r.a_is_ideal = is_ideal(L, A);
  r.b_is_ideal = is_ideal(L, B);
  r.c_a = subalgebra_class(L, A);
  r.c_b = subalgebra_class(L, B);
  r.d_g = series_length(L.dim(), dims_of(derived_series(L)));
  r.estimate_holds = r.c_a && r.c_b && r.d_g && *r.d_g <= *r.c_a + *r.c_b;
  return r;
}

}  // namespace liealg
