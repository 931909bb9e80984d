#pragma once

#include <stdexcept>
#include <string>

namespace motif {

enum class ErrorKind {
  // precondition failures
  VertexCountOutOfRange,
  ProductTooLarge,
  InvalidParams,
  TooFewVertices,
  KTooLarge,
  KNotCongruent,
  BadIndex,
  NotOddPrime,
  PrimeOutOfRange,
  EmptyOrbitSet,
  FullSideTooLarge,
  PrimeTooSmall,
  NotPrime,
  InvalidQ,
  FNotConnected,
  TargetNotInSupport,
  VanishingCliqueCoefficient,
  SingularSystem,
  ParseError,
  // internal invariant violations
  NonIntegerResult,
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

/// True for kinds that signal a bug in the library rather than bad input.
constexpr bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::NonIntegerResult || kind == ErrorKind::InvariantViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace motif
