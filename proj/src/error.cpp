#include "hnlie/error.hpp"

namespace hnlie {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::IncompatibleExtension: return "incompatible-extension";
    case ErrorCode::NegativeRadicand: return "negative-radicand";
    case ErrorCode::NonRationalRadicand: return "non-rational-radicand";
    case ErrorCode::InconsistentSystem: return "inconsistent-system";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::SingularMetric: return "singular-metric";
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::DuplicateBracket: return "duplicate-bracket";
    case ErrorCode::IndexOutOfRange: return "out-of-range";
    case ErrorCode::UndeclaredParameter: return "undeclared-parameter";
    case ErrorCode::UnboundParameter: return "unbound-parameter";
    case ErrorCode::DomainViolation: return "domain-violation";
    case ErrorCode::UnknownFamily: return "unknown-family";
    case ErrorCode::NotAdmissible: return "not-admissible";
    case ErrorCode::DecompositionFailure: return "decomposition-failure";
    case ErrorCode::SymmetryViolation: return "symmetry-violation";
    case ErrorCode::DegeneratePlane: return "degenerate-plane";
    case ErrorCode::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace hnlie
