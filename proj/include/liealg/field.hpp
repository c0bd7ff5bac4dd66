#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "liealg/errors.hpp"

namespace liealg {

/// Field selector: the rationals or a prime field F_p with p < 2^32.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidField unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::uint64_t characteristic() const { return is_rational() ? 0 : p; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t p);

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational inverse() const;
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Element of F_p. The modulus travels with the value so that mixing fields
/// is caught at the operation. A modulus of 0 marks an integer literal (such
/// as the zeros Eigen creates) that takes the modulus of the other operand.
class Fp {
 public:
  Fp() = default;
  template <std::integral I>
  Fp(I v) : value_(static_cast<std::int64_t>(v)) {}  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }
  /// Representative in [0, p) for bound values, the raw literal otherwise.
  std::int64_t value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  Fp inverse() const;
  std::string str() const { return std::to_string(value_); }

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b);
  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

 private:
  std::uint32_t unify(const Fp& o) const;

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static void check_field(const FieldSpec& field);
  static Rational from_int(std::int64_t v, const FieldSpec&) { return Rational(v); }
  static Rational from_rational(const Rational& r, const FieldSpec&) { return r; }
  static Rational parse(std::string_view text, const FieldSpec& field);
  static std::string render(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<Fp> {
  static void check_field(const FieldSpec& field);
  static Fp from_int(std::int64_t v, const FieldSpec& field);
  /// Throws NonInvertibleModP when the denominator vanishes mod p.
  static Fp from_rational(const Rational& r, const FieldSpec& field);
  static Fp parse(std::string_view text, const FieldSpec& field);
  static std::string render(const Fp& x) { return x.str(); }
};

template <class T>
concept FieldScalar = requires { ScalarTraits<T>::check_field(FieldSpec{}); };

template <FieldScalar T>
T scalar_from_int(std::int64_t v, const FieldSpec& field) {
  return ScalarTraits<T>::from_int(v, field);
}
template <FieldScalar T>
T zero(const FieldSpec& field) { return scalar_from_int<T>(0, field); }
template <FieldScalar T>
T one(const FieldSpec& field) { return scalar_from_int<T>(1, field); }

/// Parses `[-]?digits(/digits)?` into a reduced scalar of the given field.
template <FieldScalar T>
T parse_scalar(std::string_view text, const FieldSpec& field) {
  return ScalarTraits<T>::parse(text, field);
}
template <FieldScalar T>
std::string render_scalar(const T& x) { return ScalarTraits<T>::render(x); }

/// Splits scalar text into numerator and denominator; MalformedScalar or
/// ZeroDenominator on bad input.
std::pair<mpz_class, mpz_class> split_scalar_text(std::string_view text);

enum class ArithOp { Add, Sub, Mul, Div };

template <FieldScalar T>
T scalar_arith(const T& a, const T& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <FieldScalar T>
Vector<T> zero_vector(int n, const FieldSpec& field) {
  return Vector<T>::Constant(n, zero<T>(field));
}
template <FieldScalar T>
Vector<T> basis_vector(int n, int i, const FieldSpec& field) {
  Vector<T> v = zero_vector<T>(n, field);
  v(i) = one<T>(field);
  return v;
}
template <FieldScalar T>
Matrix<T> zero_matrix(int rows, int cols, const FieldSpec& field) {
  return Matrix<T>::Constant(rows, cols, zero<T>(field));
}
template <FieldScalar T>
Matrix<T> identity_matrix(int n, const FieldSpec& field) {
  Matrix<T> m = zero_matrix<T>(n, n, field);
  for (int i = 0; i < n; ++i) m(i, i) = one<T>(field);
  return m;
}

template <class Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v.derived().coeff(i))) return false;
  return true;
}

/// Exact matrix product; Eigen's blocked kernels would work too but this
/// keeps the scalar operations in one place for the big-rational case.
template <FieldScalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const FieldSpec& field) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  Matrix<T> c = zero_matrix<T>(static_cast<int>(a.rows()), static_cast<int>(b.cols()), field);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <FieldScalar T>
Vector<T> apply(const Matrix<T>& a, const Vector<T>& x, const FieldSpec& field) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes");
  Vector<T> y = zero_vector<T>(static_cast<int>(a.rows()), field);
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    if (is_zero(x(k))) continue;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) y(i) += a(i, k) * x(k);
  }
  return y;
}

}  // namespace liealg

namespace Eigen {

template <>
struct NumTraits<liealg::Rational> : GenericNumTraits<liealg::Rational> {
  using Real = liealg::Rational;
  using NonInteger = liealg::Rational;
  using Literal = liealg::Rational;
  using Nested = liealg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<liealg::Fp> : GenericNumTraits<liealg::Fp> {
  using Real = liealg::Fp;
  using NonInteger = liealg::Fp;
  using Literal = liealg::Fp;
  using Nested = liealg::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
