#include "isospec/error.hpp"

namespace isospec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::EigenNonConvergence: return "EigenNonConvergence";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DivergenceDetected: return "DivergenceDetected";
    case ErrorKind::LinearSolveFailure: return "LinearSolveFailure";
    case ErrorKind::AntipodalDegeneracy: return "AntipodalDegeneracy";
    case ErrorKind::CollisionProximity: return "CollisionProximity";
  }
  return "Unknown";
}

}  // namespace isospec
