#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liealg {

enum class ErrorCode {
  MalformedScalar,
  ZeroDenominator,
  NonInvertibleModP,
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  DimensionMismatch,
  BadDimension,
  SchemaError,
  IndexOutOfRange,
  DuplicateBracket,
  NotADerivation,
  MissingAssignment,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above. Jacobi failures and missing gradings are data, not
/// errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liealg
