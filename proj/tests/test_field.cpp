#include <gtest/gtest.h>

#include <random>

#include "liealg/field.hpp"
#include "test_util.hpp"

using namespace liealg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::SchemaError;
}

}  // namespace

// ---------------------------------------------------------------- parsing

TEST(ScalarParse, ReducedRationals) {
  EXPECT_EQ(parse_scalar<Rational>("9/10", Q), Rational(9, 10));
  EXPECT_EQ(render_scalar(parse_scalar<Rational>("9/10", Q)), "9/10");
  EXPECT_EQ(render_scalar(parse_scalar<Rational>("0", Q)), "0");
  EXPECT_EQ(parse_scalar<Rational>("0", Q).den(), 1);
  EXPECT_EQ(render_scalar(parse_scalar<Rational>("6/4", Q)), "3/2");
  EXPECT_EQ(render_scalar(parse_scalar<Rational>("-14/21", Q)), "-2/3");
  EXPECT_EQ(render_scalar(parse_scalar<Rational>("-0", Q)), "0");
  EXPECT_EQ(render_scalar(parse_scalar<Rational>("12/4", Q)), "3");
}

TEST(ScalarParse, PrimeFieldReduction) {
  const FieldSpec F5 = FieldSpec::prime(5);
  EXPECT_EQ(parse_scalar<Fp>("3/2", F5).value(), 4);  // 3 * 2^{-1} = 3 * 3 = 9 = 4
  EXPECT_EQ(parse_scalar<Fp>("-1", F5).value(), 4);
  EXPECT_EQ(parse_scalar<Fp>("12", F5).value(), 2);
  EXPECT_EQ(parse_scalar<Fp>("1", FieldSpec::prime(2)).value(), 1);
}

TEST(ScalarParse, Errors) {
  for (const char* bad : {"", "-", "1/", "/2", "1/-2", "a", "1.5", "+1", " 1", "1 ", "1//2", "--1", "0x10"})
    EXPECT_EQ(code_of([&] { parse_scalar<Rational>(bad, Q); }), ErrorCode::MalformedScalar) << bad;
  EXPECT_EQ(code_of([] { parse_scalar<Rational>("1/0", Q); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { parse_scalar<Rational>("0/0", Q); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { parse_scalar<Fp>("1/5", FieldSpec::prime(5)); }), ErrorCode::NonInvertibleModP);
  EXPECT_EQ(code_of([] { parse_scalar<Fp>("5/10", FieldSpec::prime(5)); }), ErrorCode::NonInvertibleModP);
  EXPECT_EQ(code_of([] { parse_scalar<Fp>("1", Q); }), ErrorCode::FieldMismatch);
}

TEST(FieldSpecTest, PrimeValidation) {
  EXPECT_EQ(code_of([] { FieldSpec::prime(4); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { FieldSpec::prime(1); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { FieldSpec::prime(0); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { FieldSpec::prime(1ULL << 32); }), ErrorCode::InvalidField);
  EXPECT_EQ(FieldSpec::prime(4294967291ULL).p, 4294967291U);
  EXPECT_EQ(FieldSpec::prime(7).characteristic(), 7U);
  EXPECT_EQ(Q.characteristic(), 0U);
}

// ---------------------------------------------------------------- arithmetic

TEST(ScalarArith, Examples) {
  EXPECT_EQ(scalar_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add), Rational(5, 6));
  EXPECT_EQ(scalar_arith(Rational(1, 2), Rational(1, 3), ArithOp::Sub), Rational(1, 6));
  EXPECT_EQ(scalar_arith(Rational(2, 3), Rational(9, 4), ArithOp::Mul), Rational(3, 2));
  EXPECT_EQ(scalar_arith(Rational(2, 3), Rational(4, 9), ArithOp::Div), Rational(3, 2));
  // (6 * 3) / (5 * 4 * 1): the coefficient of [e2,e5] in the graded filiform family.
  EXPECT_EQ(Rational(6 * 3) / Rational(5 * 4 * 1), Rational(9, 10));
  const FieldSpec F2 = FieldSpec::prime(2);
  EXPECT_TRUE(is_zero(one<Fp>(F2) + one<Fp>(F2)));
  const FieldSpec F7 = FieldSpec::prime(7);
  EXPECT_EQ((Fp(3, 7) / Fp(5, 7)).value(), 2);  // 5 * 2 = 10 = 3
  EXPECT_EQ(scalar_arith(Fp(3, 7), Fp(5, 7), ArithOp::Sub), scalar_from_int<Fp>(-2, F7));
}

TEST(ScalarArith, Errors) {
  EXPECT_EQ(code_of([] { Rational(1) / Rational(0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational(0).inverse(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Fp(1, 5) / Fp(0, 5); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Fp(1, 2) + Fp(1, 3); }), ErrorCode::FieldMismatch);
  EXPECT_EQ(code_of([] { Fp(1, 2) * Fp(1, 3); }), ErrorCode::FieldMismatch);
}

TEST(ScalarArith, UnboundLiteralsAdoptModulus) {
  const Fp x = Fp(3, 5) + Fp(4);
  EXPECT_EQ(x.modulus(), 5U);
  EXPECT_EQ(x.value(), 2);
  EXPECT_EQ(Fp(0), Fp(0, 5));
}

// ---------------------------------------------------------------- properties

TEST(FieldProperties, RationalAxioms) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng), c = oracle::random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE(is_zero(a + (-a)));
    if (!is_zero(a)) EXPECT_EQ(a * a.inverse(), Rational(1));
    EXPECT_EQ(parse_scalar<Rational>(render_scalar(a), Q), a);
    EXPECT_EQ(gcd(a.num(), a.den()), 1);
    EXPECT_GT(a.den(), 0);
  }
}

TEST(FieldProperties, PrimeFieldAxioms) {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 101U, 65537U, 4294967291U}) {
    const FieldSpec F = FieldSpec::prime(p);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    for (int t = 0; t < 200; ++t) {
      const Fp a = scalar_from_int<Fp>(dist(rng), F), b = scalar_from_int<Fp>(dist(rng), F),
               c = scalar_from_int<Fp>(dist(rng), F);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE(is_zero(a - a));
      if (!is_zero(a)) EXPECT_EQ(a * a.inverse(), one<Fp>(F));
      EXPECT_GE(a.value(), 0);
      EXPECT_LT(a.value(), static_cast<std::int64_t>(p));
    }
  }
}

TEST(FieldProperties, ReductionIsARingMap) {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2U, 3U, 7U, 10007U}) {
    const FieldSpec F = FieldSpec::prime(p);
    auto red = [&](const Rational& r) { return ScalarTraits<Fp>::from_rational(r, F); };
    for (int t = 0; t < 300; ++t) {
      const Rational a = oracle::random_rational(rng, 30), b = oracle::random_rational(rng, 30);
      if (a.den() % p == 0 || b.den() % p == 0) continue;
      EXPECT_EQ(red(a + b), red(a) + red(b));
      EXPECT_EQ(red(a * b), red(a) * red(b));
      EXPECT_EQ(red(-a), -red(a));
      if (!is_zero(red(b))) EXPECT_EQ(red(a / b), red(a) / red(b));
      EXPECT_EQ(parse_scalar<Fp>(render_scalar(a), F), red(a));
    }
  }
}
