#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace howe {

enum class ErrorKind {
  NotPrime,
  ModulusTooLarge,
  ModulusMismatch,
  NonResidue,
  DivisionByZero,
  HypothesisViolated,
  HasseViolation,
  CapExceeded,
  Degenerate,
  CrossRatioFailed,
  NonSquareObstruction,
  DegenerateLambda,
  ConditionFailed,
  DecompositionMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class HoweError : public std::runtime_error {
 public:
  HoweError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace howe
