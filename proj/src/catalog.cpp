#include "liealg/catalog.hpp"

namespace liealg {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

Rational f_nine_tenths_coefficient(int i, int j) {
  if (i < 2 || j < i) throw Error(ErrorCode::IndexOutOfRange, "coefficient needs 2 <= i <= j");
  const mpz_class num = 6 * (j - i);
  const mpz_class den = mpz_class(j) * (j - 1) * binomial(j + i - 2, i - 2);
  return Rational(num, den);
}

LieAlgebra<Rational> f_nine_tenths(int n) {
  if (n < 3) throw Error(ErrorCode::BadDimension, "f_{9/10,n} needs n >= 3");
  const FieldSpec q = FieldSpec::rationals();
  LieAlgebra<Rational> L(n, q);
  for (int j = 2; j <= n - 1; ++j) L.add_term(0, j - 1, j, Rational(1));
  // i = j gives 0, so only i < j contributes.
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) L.add_term(i - 1, j - 1, i + j - 1, f_nine_tenths_coefficient(i, j));
  return L;
}

const std::vector<IntBracket>& g14_table() {
  static const std::vector<IntBracket> table = {
      {1, 2, 3, 1},    {1, 3, 4, 1},    {1, 4, 5, 1},     {1, 5, 7, 1},     {1, 6, 8, 1},
      {1, 8, 10, 1},   {1, 9, 11, 1},   {1, 11, 12, 1},   {1, 12, 13, 1},   {2, 5, 6, 1},
      {2, 7, 8, 2},    {2, 8, 9, 2},    {2, 10, 11, 1},   {2, 13, 14, 1},   {3, 4, 6, -1},
      {3, 5, 8, -1},   {3, 6, 9, -2},   {3, 7, 10, 2},    {3, 8, 11, 1},    {3, 10, 12, 1},
      {3, 12, 14, -1}, {4, 5, 10, -3},  {4, 6, 11, -3},   {4, 10, 13, 1},   {4, 11, 14, 1},
      {5, 6, 12, -3},  {5, 8, 13, -1},  {5, 9, 14, -1},   {6, 7, 13, 2},    {6, 8, 14, 1},
  };
  return table;
}

LieAlgebra<Rational> g14() { return from_integer_table<Rational>(14, FieldSpec::rationals(), g14_table()); }

std::array<std::int64_t, 14> g14_weights(std::int64_t a, std::int64_t b) {
  return {a,         b,         a + b,     2 * a + b, 3 * a + b,     3 * a + 2 * b, 4 * a + b,
          4 * a + 2 * b, 4 * a + 3 * b, 5 * a + 2 * b, 5 * a + 3 * b, 6 * a + 3 * b, 7 * a + 3 * b, 7 * a + 4 * b};
}

const std::vector<IntBracket>& bokut12_table() {
  static const std::vector<IntBracket> table = {
      {1, 2, 4, 1},  {1, 3, 5, 1},  {1, 6, 7, 1},   {1, 8, 9, 1},   {1, 10, 11, 1}, {2, 5, 6, 1},
      {2, 7, 8, 1},  {2, 9, 10, 1}, {3, 4, 6, 1},   {3, 7, 8, 1},   {3, 9, 10, 1},  {3, 11, 12, 1},
      {4, 5, 7, 1},  {4, 6, 8, 1},  {4, 7, 9, 1},   {4, 8, 10, 1},  {4, 9, 11, 1},  {5, 6, 8, 1},
      {5, 7, 9, 1},  {5, 8, 10, 1}, {5, 9, 11, 1},  {5, 10, 12, 1}, {6, 9, 12, 1},  {7, 8, 12, 1},
  };
  return table;
}

LieAlgebra<Fp> bokut12() { return bokut12_over<Fp>(FieldSpec::prime(2)); }

LieAlgebra<Rational> filiform6() {
  std::vector<IntBracket> table;
  for (int i = 2; i <= 5; ++i) table.push_back({1, i, i + 1, 1});
  table.push_back({2, 5, 6, 1});
  table.push_back({3, 4, 6, -1});
  return from_integer_table<Rational>(6, FieldSpec::rationals(), table);
}

}  // namespace liealg
