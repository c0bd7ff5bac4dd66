#include "liealg/field.hpp"

#include <cctype>
#include <limits>

namespace liealg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedScalar: return "MalformedScalar";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonInvertibleModP: return "NonInvertibleModP";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateBracket: return "DuplicateBracket";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
    throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^32");
  return FieldSpec{Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
  q_ /= o.q_;
  return *this;
}

// ---------------------------------------------------------------- Fp

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Fp::Fp(std::int64_t v, std::uint32_t p) : value_(reduce(v, p)), modulus_(p) {
  if (p < 2) throw Error(ErrorCode::InvalidField, "F_p modulus must be at least 2");
}

std::uint32_t Fp::unify(const Fp& o) const {
  if (modulus_ != 0 && o.modulus_ != 0 && modulus_ != o.modulus_)
    throw Error(ErrorCode::FieldMismatch,
                "F_" + std::to_string(modulus_) + " vs F_" + std::to_string(o.modulus_));
  return modulus_ != 0 ? modulus_ : o.modulus_;
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (modulus_ == 0) r.value_ = -value_;
  else if (value_ != 0) r.value_ = static_cast<std::int64_t>(modulus_) - value_;
  return r;
}

Fp& Fp::operator+=(const Fp& o) {
  const std::uint32_t p = unify(o);
  if (p == 0) {
    value_ += o.value_;
    return *this;
  }
  value_ = (reduce(value_, p) + reduce(o.value_, p)) % static_cast<std::int64_t>(p);
  modulus_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  const std::uint32_t p = unify(o);
  if (p == 0) {
    value_ *= o.value_;
    return *this;
  }
  const auto a = static_cast<std::uint64_t>(reduce(value_, p));
  const auto b = static_cast<std::uint64_t>(reduce(o.value_, p));
  value_ = static_cast<std::int64_t>((a * b) % p);
  modulus_ = p;
  return *this;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_p");
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw Error(ErrorCode::FieldMismatch, "inverse of an unbound literal");
  }
  // Extended Euclid on (value, p); p prime so gcd is 1.
  std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Fp(s0, modulus_);
}

Fp& Fp::operator/=(const Fp& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0 in F_p");
  const std::uint32_t p = unify(o);
  if (p == 0) {
    if (value_ % o.value_ != 0) throw Error(ErrorCode::FieldMismatch, "inexact division of unbound literals");
    value_ /= o.value_;
    return *this;
  }
  Fp inv = Fp(o.value_, p).inverse();
  return *this *= inv;
}

bool operator==(const Fp& a, const Fp& b) {
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) return false;
  const std::uint32_t p = a.modulus_ != 0 ? a.modulus_ : b.modulus_;
  if (p == 0) return a.value_ == b.value_;
  return reduce(a.value_, p) == reduce(b.value_, p);
}

// ---------------------------------------------------------------- parsing

std::pair<mpz_class, mpz_class> split_scalar_text(std::string_view text) {
  auto malformed = [&] {
    return Error(ErrorCode::MalformedScalar, "'" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) ++pos;
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  const std::size_t num_end = digits(pos);
  if (num_end == pos) throw malformed();
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den = 1;
  if (num_end != text.size()) {
    if (text[num_end] != '/') throw malformed();
    const std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) throw malformed();
    den = mpz_class(std::string(text.substr(num_end + 1)), 10);
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "'" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return {num, den};
}

void ScalarTraits<Rational>::check_field(const FieldSpec& field) {
  if (!field.is_rational())
    throw Error(ErrorCode::FieldMismatch, "rational scalars used with " + field.name());
}

Rational ScalarTraits<Rational>::parse(std::string_view text, const FieldSpec& field) {
  check_field(field);
  auto [num, den] = split_scalar_text(text);
  return Rational(num, den);
}

void ScalarTraits<Fp>::check_field(const FieldSpec& field) {
  if (field.is_rational()) throw Error(ErrorCode::FieldMismatch, "F_p scalars used with Q");
}

Fp ScalarTraits<Fp>::from_int(std::int64_t v, const FieldSpec& field) {
  check_field(field);
  return Fp(v, field.p);
}

Fp ScalarTraits<Fp>::from_rational(const Rational& r, const FieldSpec& field) {
  check_field(field);
  const mpz_class p = field.p;
  mpz_class num = r.num() % p;
  mpz_class den = r.den() % p;
  if (num < 0) num += p;
  if (den == 0)
    throw Error(ErrorCode::NonInvertibleModP, r.str() + " has denominator divisible by " + field.name());
  return Fp(num.get_si(), field.p) / Fp(den.get_si(), field.p);
}

Fp ScalarTraits<Fp>::parse(std::string_view text, const FieldSpec& field) {
  check_field(field);
  auto [num, den] = split_scalar_text(text);
  // The written denominator must be a unit, even if the fraction reduces.
  if (den % field.p == 0)
    throw Error(ErrorCode::NonInvertibleModP, "'" + std::string(text) + "' in " + field.name());
  return from_rational(Rational(num, den), field);
}

}  // namespace liealg
