#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leonard {

enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  DivisionByZero,
  EmptyPolynomial,
  ParseError,
  SizeMismatch,
  DegenerateDenominator,
  NoQInField,
  InconsistentSequence,
  ConstraintViolated,
  InvalidParameters,
  RepeatedEigenvalue,
  NotAnEigenvalue,
  IndexOutOfRange,
  NotALeonardSystem,
  NotMultiplicityFree,
  NotTridiagonalizable,
  SingularMatrix,
  InconsistentData,
  ZeroDenominator,
  InvalidField,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leonard
