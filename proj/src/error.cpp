#include "koszulkit/error.hpp"

namespace koszulkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonQuadraticInput: return "NonQuadraticInput";
    case ErrorCode::NonMonomialInput: return "NonMonomialInput";
    case ErrorCode::NonQuadraticMonomialInput: return "NonQuadraticMonomialInput";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::InsufficientGBBound: return "InsufficientGBBound";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotSingleDegreeGenerated: return "NotSingleDegreeGenerated";
    case ErrorCode::ColonNotSubsetGenerated: return "ColonNotSubsetGenerated";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& expected)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(expected) {}

}  // namespace koszulkit
