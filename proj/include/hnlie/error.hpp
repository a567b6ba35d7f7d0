#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hnlie {

enum class ErrorCode {
  DivisionByZero,
  IncompatibleExtension,
  NegativeRadicand,
  NonRationalRadicand,
  InconsistentSystem,
  DimensionMismatch,
  SingularMetric,
  SyntaxError,
  DuplicateBracket,
  IndexOutOfRange,
  UndeclaredParameter,
  UnboundParameter,
  DomainViolation,
  UnknownFamily,
  NotAdmissible,
  DecompositionFailure,
  SymmetryViolation,
  DegeneratePlane,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hnlie
