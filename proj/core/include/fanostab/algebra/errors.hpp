#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanostab {

enum class ErrorCode {
  DegenerateInput,
  IncompleteSubstitution,
  WrongMultiplicity,
  NeedsLinearPreparation,
  WrongDegree,
  NotSemiInvariant,
  NotInFiber,
  OutOfRange,
  NotReduced,
  UnsupportedQuadric,
  UnresolvedRoots,
  IncompleteGeometry,
  NotADoublePoint,
  NotEven,
  DimensionMismatch,
  DegreeMismatch,
  SyntaxError,
  UnsupportedField,
  DivisionByZero,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this exception; `code()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fanostab
