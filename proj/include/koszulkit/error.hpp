#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace koszulkit {

enum class ErrorCode {
  FieldMismatch,
  SingularMatrix,
  ZeroPolynomial,
  NonQuadraticInput,
  NonMonomialInput,
  NonQuadraticMonomialInput,
  NotQuadratic,
  InsufficientGBBound,
  DegreeOutOfRange,
  NotSingleDegreeGenerated,
  ColonNotSubsetGenerated,
  SingularSystem,
  SearchLimitExceeded,
  GenericityFailure,
  ParseError,
  NonHomogeneousRelation,
  UnknownGenerator,
  NonInvertibleDenominator,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expected);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace koszulkit
