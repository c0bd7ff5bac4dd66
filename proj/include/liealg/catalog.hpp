#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// One structure constant in 1-based indexing: [e_i, e_j] += c e_k.
struct IntBracket {
  int i, j, k;
  std::int64_t c;
};

template <FieldScalar T>
LieAlgebra<T> from_integer_table(int n, const FieldSpec& field, const std::vector<IntBracket>& table) {
  LieAlgebra<T> L(n, field);
  for (const auto& b : table) L.add_term(b.i - 1, b.j - 1, b.k - 1, scalar_from_int<T>(b.c, field));
  return L;
}

/// [e_1, e_i] = e_{i+1} for 2 <= i <= n-1 and nothing else.
template <FieldScalar T>
LieAlgebra<T> standard_filiform(int n, const FieldSpec& field) {
  if (n < 3) throw Error(ErrorCode::BadDimension, "standard filiform needs n >= 3");
  std::vector<IntBracket> table;
  for (int i = 2; i <= n - 1; ++i) table.push_back({1, i, i + 1, 1});
  return from_integer_table<T>(n, field, table);
}

/// Coefficient of e_{i+j} in [e_i, e_j] for f_{9/10,n}, 2 <= i <= j:
/// 6(j-i) / (j(j-1) C(j+i-2, i-2)).
Rational f_nine_tenths_coefficient(int i, int j);

/// The graded filiform family with [e_1,e_j] = e_{j+1} and the coefficients
/// above on [e_i,e_j] -> e_{i+j}. Derived length k when n = 2^k - 1.
LieAlgebra<Rational> f_nine_tenths(int n);

/// The 14-dimensional two-generator nilpotent algebra with integer structure
/// constants (30 brackets), class 11 and derived length 4.
const std::vector<IntBracket>& g14_table();
LieAlgebra<Rational> g14();

/// Weights of the diagonal grading derivation of g14 at (alpha, beta).
std::array<std::int64_t, 14> g14_weights(std::int64_t alpha, std::int64_t beta);

/// Bokut's 12-dimensional table (24 brackets, all coefficients 1). It is a
/// Lie algebra in characteristic 2.
const std::vector<IntBracket>& bokut12_table();
LieAlgebra<Fp> bokut12();

template <FieldScalar T>
LieAlgebra<T> bokut12_over(const FieldSpec& field) {
  return from_integer_table<T>(12, field, bokut12_table());
}

/// 6-dimensional filiform algebra of derived length 3 over Q.
LieAlgebra<Rational> filiform6();

}  // namespace liealg
