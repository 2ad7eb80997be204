#include "howe/errors.hpp"

namespace howe {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::HasseViolation: return "HasseViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::CrossRatioFailed: return "CrossRatioFailed";
    case ErrorKind::NonSquareObstruction: return "NonSquareObstruction";
    case ErrorKind::DegenerateLambda: return "DegenerateLambda";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace howe
