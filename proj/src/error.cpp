#include "jordanlab/error.hpp"

namespace jordanlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IncompatiblePayloads: return "IncompatiblePayloads";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoConsistentAction: return "NoConsistentAction";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::HomomorphismFailure: return "HomomorphismFailure";
    case ErrorCode::ProjectorMismatch: return "ProjectorMismatch";
    case ErrorCode::NoCleanLift: return "NoCleanLift";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace jordanlab
