#include <gtest/gtest.h>

#include <random>

#include "liealg/catalog.hpp"
#include "liealg/filiform.hpp"
#include "liealg/series.hpp"
#include "test_util.hpp"

using namespace liealg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Assignment random_assignment(const SymbolicFiliform& sf, std::mt19937_64& rng) {
  Assignment a;
  for (const auto& p : sf.params()) a[p] = oracle::random_rational(rng, 4);
  return a;
}

Assignment zero_assignment(const SymbolicFiliform& sf) {
  Assignment a;
  for (const auto& p : sf.params()) a[p] = Rational(0);
  return a;
}

}  // namespace

TEST(FiliformModel, ParameterSets) {
  EXPECT_TRUE(parameter_indices(3).empty());
  EXPECT_EQ(parameter_indices(4), (std::vector<ParamIndex>{{2, 4}}));
  EXPECT_EQ(parameter_indices(5), (std::vector<ParamIndex>{{2, 5}}));
  EXPECT_EQ(parameter_indices(7), (std::vector<ParamIndex>{{2, 5}, {2, 6}, {2, 7}, {3, 7}}));
  const auto p14 = parameter_indices(14);
  EXPECT_EQ(p14.size(), 31U);
  EXPECT_TRUE(std::is_sorted(p14.begin(), p14.end()));
  EXPECT_EQ(p14.back(), (ParamIndex{7, 14}));
  EXPECT_EQ(build_symbolic(14).nvars(), 31);
}

TEST(FiliformModel, SymbolicBracketsAreGraded) {
  const auto sf = build_symbolic(14);
  // [e_i, e_j] only reaches e_s with s >= i + j, except the e_14 component
  // of [e_i, e_{15-i}]; and [e_7, e_8] = a7_14 e_14.
  for (int i = 2; i <= 14; ++i)
    for (int j = i + 1; j <= 14; ++j) {
      const auto row = sf.stored(i, j);
      for (int s = 1; s < std::min(i + j, 15); ++s)
        if (!(s == 14 && i + j == 15)) EXPECT_TRUE(row[static_cast<std::size_t>(s)].is_zero()) << i << "," << j << "@" << s;
    }
  const auto top = sf.stored(7, 8)[14];
  EXPECT_TRUE(top == QPoly::variable(31, Q, sf.var_of({7, 14})));
  EXPECT_TRUE(sf.stored(1, 5)[6] == QPoly::constant(31, Q, Rational(1)));
  // Antisymmetric access.
  EXPECT_TRUE(sf.bracket(8, 7)[14] == -top);
}

TEST(FiliformModel, ZeroAssignmentIsStandard) {
  for (int n = 3; n <= 14; ++n) {
    const auto sf = build_symbolic(n);
    EXPECT_TRUE(specialize(sf, zero_assignment(sf)) == standard_filiform<Rational>(n, Q)) << n;
  }
}

TEST(FiliformModel, GradedFamilyOracle) {
  for (int n = 3; n <= 14; ++n) {
    const auto sf = build_symbolic(n);
    const auto params = f910_parameters(n);
    EXPECT_TRUE(specialize(sf, params) == f_nine_tenths(n)) << n;
    const auto cs = jacobi_constraints(sf);
    for (const auto& v : specialize(cs.constraints, sf, params)) EXPECT_TRUE(is_zero(v)) << n;
  }
}

TEST(FiliformModel, ConstraintsAreJacobiatorCoordinates) {
  // At any parameter point the constraints equal the Jacobiator of the
  // specialized algebra coordinate by coordinate.
  std::mt19937_64 rng(61);
  for (int n : {6, 9, 11}) {
    const auto sf = build_symbolic(n);
    const auto cs = jacobi_constraints(sf);
    for (int t = 0; t < 3; ++t) {
      const auto a = random_assignment(sf, rng);
      const auto L = specialize(sf, a);
      const auto values = specialize(cs.constraints, sf, a);
      std::map<std::array<int, 4>, Rational> listed;
      for (std::size_t r = 0; r < cs.constraints.size(); ++r) {
        const auto& c = cs.constraints[r];
        listed[{c.a, c.b, c.c, c.s}] = values[r];
      }
      for (int x = 2; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
          for (int z = y + 1; z <= n; ++z) {
            const auto J = jacobiator(L, x - 1, y - 1, z - 1);
            for (int s = 1; s <= n; ++s) {
              auto it = listed.find({x, y, z, s});
              const Rational want = it == listed.end() ? Rational(0) : it->second;
              EXPECT_EQ(J(s - 1), want) << n << ": " << x << y << z << "@" << s;
            }
          }
      // Triples through e_1 hold identically in the model.
      for (int y = 2; y <= n; ++y)
        for (int z = y + 1; z <= n; ++z) EXPECT_TRUE(is_zero_vector(jacobiator(L, 0, y - 1, z - 1)));
    }
  }
}

TEST(FiliformModel, ConstraintSetShape) {
  const auto cs = jacobi_constraints(build_symbolic(14));
  EXPECT_TRUE(cs.e1_triples_vanish);
  EXPECT_EQ(cs.e1_triples, 78);  // pairs 2 <= b < c <= 14
  EXPECT_EQ(cs.constraints.size(), 48U);
  for (const auto& c : cs.constraints) {
    EXPECT_FALSE(c.poly.is_zero());
    EXPECT_GE(c.a, 2);
    EXPECT_LT(c.a, c.b);
    EXPECT_LT(c.b, c.c);
  }
  auto has = [&](int a, int b, int c) {
    for (const auto& x : cs.constraints)
      if (x.a == a && x.b == b && x.c == c) return true;
    return false;
  };
  EXPECT_TRUE(has(2, 3, 4));
  EXPECT_TRUE(has(2, 3, 8));
  EXPECT_TRUE(has(3, 4, 5));
}

TEST(FiliformModel, MissingAssignment) {
  const auto sf = build_symbolic(7);
  auto a = f910_parameters(7);
  a.erase(ParamIndex{3, 7});
  try {
    specialize(sf, a);
    FAIL() << "accepted an incomplete assignment";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingAssignment);
  }
}

TEST(FiliformModel, ThirdAdaptedCondition) {
  std::mt19937_64 rng(62);
  for (int n = 4; n <= 14; ++n) {
    const auto sf = build_symbolic(n);
    for (int t = 0; t < 3; ++t) {
      const auto a = random_assignment(sf, rng);
      const auto alpha = third_adapted_condition(specialize(sf, a));
      ASSERT_TRUE(alpha.has_value()) << n;
      if (n % 2 == 1) EXPECT_TRUE(is_zero(*alpha));
      else EXPECT_EQ(*alpha, a.at(ParamIndex{n / 2, n}) * Rational((n / 2) % 2 == 1 ? 1 : -1));
    }
  }
  // Breaking [e_2, e_{n-1}] breaks the condition.
  auto L = f_nine_tenths(8);
  L.add_term(1, 6, 7, Rational(1));
  EXPECT_FALSE(third_adapted_condition(L).has_value());
}

TEST(FiliformModel, DerivedLengthAtMostThreeBelowFourteen) {
  // Instances of the model below dimension 14 that are Lie algebras.
  for (int n = 3; n <= 13; ++n) {
    const auto sf = build_symbolic(n);
    for (const auto& a : {zero_assignment(sf), f910_parameters(n)}) {
      const auto L = specialize(sf, a);
      ASSERT_TRUE(satisfies_jacobi(L));
      EXPECT_LE(*invariants(L).derived_length, 3) << n;
    }
  }
}

TEST(Subsystem14, Reduction) {
  const auto an = n14_subsystem();
  EXPECT_EQ(an.constraint_count, 48U);
  EXPECT_EQ(an.divisible.size(), 7U);
  ASSERT_EQ(an.relations.size(), 2U);
  ASSERT_EQ(an.matches.size(), 3U);
  // The second and third printed relations are scalar multiples of generated ones.
  EXPECT_TRUE(an.matches[1].exact);
  EXPECT_TRUE(an.matches[2].exact);
  for (int m : {1, 2}) {
    ASSERT_TRUE(an.matches[m].projected.has_value());
    const auto& gen = an.projected[*an.matches[m].projected].poly;
    EXPECT_TRUE(an.printed[m] == gen * an.matches[m].scale);
  }
  // Projected relations only involve x1, x2, x3.
  for (const auto& p : an.projected) EXPECT_EQ(p.poly.nvars(), 3);
  EXPECT_TRUE(an.printed_solutions.complete());
  for (const auto& chk : an.finite_field_checks) EXPECT_TRUE(chk.agree) << chk.p;
}
