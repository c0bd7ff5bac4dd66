#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "liealg/echelon.hpp"
#include "test_util.hpp"

using namespace liealg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

template <FieldScalar T>
using Rows = std::vector<std::vector<T>>;

Rows<Rational> random_rows(std::mt19937_64& rng, int rows, int cols, int rank_hint) {
  // Rows drawn from a random span of `rank_hint` generators, so ranks vary.
  Rows<Rational> gens(static_cast<std::size_t>(rank_hint), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (auto& g : gens)
    for (auto& x : g) x = (rng() % 3 == 0) ? Rational(0) : oracle::random_rational(rng, 5);
  Rows<Rational> out(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
  for (auto& r : out)
    for (const auto& g : gens) {
      const Rational c = oracle::random_rational(rng, 3);
      for (int k = 0; k < cols; ++k) r[k] += c * g[k];
    }
  return out;
}

template <FieldScalar T>
Vector<T> to_vec(const std::vector<T>& v, const FieldSpec& f) {
  Vector<T> out = zero_vector<T>(static_cast<int>(v.size()), f);
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

template <FieldScalar T>
Subspace<T> span_of(const Rows<T>& rows, int cols, const FieldSpec& f) {
  std::vector<Vector<T>> vs;
  for (const auto& r : rows) vs.push_back(to_vec(r, f));
  return Subspace<T>::span(vs, cols, f);
}

template <FieldScalar T>
Rows<T> rows_of(const Subspace<T>& U) {
  Rows<T> out;
  for (int r = 0; r < U.dim(); ++r) {
    std::vector<T> row;
    for (int c = 0; c < U.ambient_dim(); ++c) row.push_back(U.basis()(r, c));
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST(Echelon, MatchesDenseReference) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const int cols = 1 + static_cast<int>(rng() % 8);
    const int rows = 1 + static_cast<int>(rng() % 8);
    const auto m = random_rows(rng, rows, cols, 1 + static_cast<int>(rng() % 5));
    const auto U = span_of(m, cols, Q);
    EXPECT_EQ(rows_of(U), oracle::rref(m, cols));
  }
}

TEST(Echelon, CanonicalUnderRowOrderAndScaling) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const int cols = 2 + static_cast<int>(rng() % 7);
    auto m = random_rows(rng, 6, cols, 1 + static_cast<int>(rng() % 4));
    const auto U = span_of(m, cols, Q);
    std::shuffle(m.begin(), m.end(), rng);
    for (auto& r : m) {
      Rational s = oracle::random_rational(rng, 7);
      if (is_zero(s)) s = Rational(-2);
      for (auto& x : r) x *= s;
    }
    EXPECT_TRUE(span_of(m, cols, Q) == U);
  }
}

TEST(Echelon, ReducedFormShape) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto U = span_of(random_rows(rng, 5, 7, 4), 7, Q);
    for (int r = 0; r < U.dim(); ++r) {
      const int p = U.pivots()[static_cast<std::size_t>(r)];
      if (r > 0) EXPECT_GT(p, U.pivots()[static_cast<std::size_t>(r - 1)]);
      EXPECT_EQ(U.basis()(r, p), Rational(1));
      for (int c = 0; c < p; ++c) EXPECT_TRUE(is_zero(U.basis()(r, c)));
      for (int o = 0; o < U.dim(); ++o)
        if (o != r) EXPECT_TRUE(is_zero(U.basis()(o, p)));
    }
  }
}

TEST(Echelon, SumAndContainment) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 40; ++t) {
    const auto A = span_of(random_rows(rng, 3, 6, 2), 6, Q);
    const auto B = span_of(random_rows(rng, 3, 6, 2), 6, Q);
    const auto S = A + B;
    EXPECT_TRUE(S.contains(A));
    EXPECT_TRUE(S.contains(B));
    EXPECT_LE(S.dim(), A.dim() + B.dim());
    EXPECT_TRUE(S == B + A);
    for (int r = 0; r < A.dim(); ++r)
      for (int q = 0; q < B.dim(); ++q) EXPECT_TRUE(S.contains(Vector<Rational>(A.row(r) * Rational(3) - B.row(q))));
  }
  const auto e1 = Subspace<Rational>::coordinate_span(3, {0}, Q);
  EXPECT_FALSE(e1.contains(basis_vector<Rational>(3, 1, Q)));
  EXPECT_TRUE(Subspace<Rational>::full(3, Q).contains(e1));
  EXPECT_TRUE(e1.contains(Subspace<Rational>::zero(3, Q)));
}

TEST(Echelon, NullspaceRankNullity) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 60; ++t) {
    const int cols = 1 + static_cast<int>(rng() % 8);
    const auto m = random_rows(rng, 1 + static_cast<int>(rng() % 6), cols, 1 + static_cast<int>(rng() % 4));
    EchelonBuilder<Rational> system(cols, Q);
    for (const auto& r : m) system.insert(to_vec(r, Q));
    const auto K = nullspace(system);
    const int rank = static_cast<int>(oracle::rref(m, cols).size());
    EXPECT_EQ(system.rank(), rank);
    EXPECT_EQ(K.dim(), cols - rank);
    for (const auto& v : K.vectors())
      for (const auto& r : m) {
        Rational dot(0);
        for (int c = 0; c < cols; ++c) dot += r[c] * v(c);
        EXPECT_TRUE(is_zero(dot));
      }
  }
}

TEST(Echelon, PrimeFieldMatchesDenseReference) {
  std::mt19937_64 rng(26);
  for (std::uint32_t p : {2U, 3U, 7U}) {
    const FieldSpec F = FieldSpec::prime(p);
    for (int t = 0; t < 40; ++t) {
      const int cols = 1 + static_cast<int>(rng() % 7);
      Rows<Fp> m(1 + rng() % 7, std::vector<Fp>(static_cast<std::size_t>(cols)));
      for (auto& r : m)
        for (auto& x : r) x = scalar_from_int<Fp>(static_cast<std::int64_t>(rng() % p), F);
      const auto U = span_of(m, cols, F);
      EXPECT_EQ(rows_of(U), oracle::rref(m, cols));
      EchelonBuilder<Fp> system(cols, F);
      for (const auto& r : m) system.insert(to_vec(r, F));
      EXPECT_EQ(nullspace(system).dim(), cols - U.dim());
    }
  }
}

TEST(Echelon, EmbedPadsWithZeros) {
  const auto U = Subspace<Rational>::span({to_vec<Rational>({1, 2, 0}, Q)}, 3, Q);
  const auto V = U.embed(5);
  EXPECT_EQ(V.ambient_dim(), 5);
  EXPECT_TRUE(V.contains(to_vec<Rational>({1, 2, 0, 0, 0}, Q)));
  EXPECT_FALSE(V.contains(to_vec<Rational>({1, 2, 0, 0, 1}, Q)));
  EXPECT_THROW(U.embed(2), Error);
  EXPECT_EQ(matrix_rank<Rational>(identity_matrix<Rational>(4, Q), Q), 4);
}
