#pragma once

#include <random>
#include <vector>

#include "liealg/algebra.hpp"

// Reference implementations kept deliberately naive: dense tensors and a
// textbook elimination, sharing nothing with the sparse code under test.
namespace oracle {

using liealg::FieldScalar;
using liealg::FieldSpec;

template <FieldScalar T>
struct DenseTensor {
  int n;
  std::vector<T> c;  // c[(i*n + j)*n + k]
  T& at(int i, int j, int k) { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
  const T& at(int i, int j, int k) const { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
};

template <FieldScalar T>
DenseTensor<T> tensor_of(const liealg::LieAlgebra<T>& L) {
  const int n = L.dim();
  DenseTensor<T> t{n, std::vector<T>(static_cast<std::size_t>(n * n * n), liealg::zero<T>(L.field()))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t.at(i, j, k) = L.structure_constant(i, j, k);
  return t;
}

template <FieldScalar T>
std::vector<T> bracket(const DenseTensor<T>& t, const std::vector<T>& x, const std::vector<T>& y, const FieldSpec& f) {
  std::vector<T> out(static_cast<std::size_t>(t.n), liealg::zero<T>(f));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) out[k] += x[i] * y[j] * t.at(i, j, k);
  return out;
}

template <FieldScalar T>
std::vector<T> unit(int n, int i, const FieldSpec& f) {
  std::vector<T> v(static_cast<std::size_t>(n), liealg::zero<T>(f));
  v[static_cast<std::size_t>(i)] = liealg::one<T>(f);
  return v;
}

template <FieldScalar T>
bool all_zero(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!liealg::is_zero(x)) return false;
  return true;
}

/// Dense RREF, rows returned with zero rows dropped.
template <FieldScalar T>
std::vector<std::vector<T>> rref(std::vector<std::vector<T>> m, int cols) {
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && liealg::is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const T inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || liealg::is_zero(m[q][c])) continue;
      const T f = m[q][c];
      for (int k = 0; k < cols; ++k) m[q][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

template <FieldScalar T>
std::vector<std::vector<T>> bracket_span(const DenseTensor<T>& t, const std::vector<std::vector<T>>& U,
                                         const std::vector<std::vector<T>>& V, const FieldSpec& f) {
  std::vector<std::vector<T>> rows;
  for (const auto& u : U)
    for (const auto& v : V) rows.push_back(bracket(t, u, v, f));
  return rref(rows, t.n);
}

template <FieldScalar T>
std::vector<std::vector<T>> identity_rows(int n, const FieldSpec& f) {
  std::vector<std::vector<T>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(unit<T>(n, i, f));
  return rows;
}

/// Dimensions of the derived series until zero or repetition.
template <FieldScalar T>
std::vector<int> derived_dims(const liealg::LieAlgebra<T>& L) {
  const auto t = tensor_of(L);
  auto cur = identity_rows<T>(L.dim(), L.field());
  std::vector<int> dims;
  while (true) {
    auto next = bracket_span(t, cur, cur, L.field());
    if (next == cur) break;
    dims.push_back(static_cast<int>(next.size()));
    if (next.empty()) break;
    cur = std::move(next);
  }
  return dims;
}

template <FieldScalar T>
std::vector<int> lower_central_dims(const liealg::LieAlgebra<T>& L) {
  const auto t = tensor_of(L);
  const auto full = identity_rows<T>(L.dim(), L.field());
  auto cur = full;
  std::vector<int> dims;
  while (true) {
    auto next = bracket_span(t, full, cur, L.field());
    if (next == cur) break;
    dims.push_back(static_cast<int>(next.size()));
    if (next.empty()) break;
    cur = std::move(next);
  }
  return dims;
}

/// Triples (a < b < c) with a nonzero Jacobiator, from the dense tensor.
template <FieldScalar T>
std::vector<std::array<int, 3>> jacobi_failures(const liealg::LieAlgebra<T>& L) {
  const auto t = tensor_of(L);
  const auto& f = L.field();
  const int n = L.dim();
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        auto ea = unit<T>(n, a, f), eb = unit<T>(n, b, f), ec = unit<T>(n, c, f);
        auto j1 = bracket(t, ea, bracket(t, eb, ec, f), f);
        auto j2 = bracket(t, eb, bracket(t, ec, ea, f), f);
        auto j3 = bracket(t, ec, bracket(t, ea, eb, f), f);
        for (int k = 0; k < n; ++k) j1[k] += j2[k] + j3[k];
        if (!all_zero(j1)) out.push_back({a, b, c});
      }
  return out;
}

inline liealg::Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return liealg::Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace oracle
