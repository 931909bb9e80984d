#include "motif/error.hpp"

namespace motif {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VertexCountOutOfRange: return "VertexCountOutOfRange";
    case ErrorKind::ProductTooLarge: return "ProductTooLarge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::KNotCongruent: return "KNotCongruent";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::PrimeOutOfRange: return "PrimeOutOfRange";
    case ErrorKind::EmptyOrbitSet: return "EmptyOrbitSet";
    case ErrorKind::FullSideTooLarge: return "FullSideTooLarge";
    case ErrorKind::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::FNotConnected: return "FNotConnected";
    case ErrorKind::TargetNotInSupport: return "TargetNotInSupport";
    case ErrorKind::VanishingCliqueCoefficient: return "VanishingCliqueCoefficient";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace motif
