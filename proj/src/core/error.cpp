#include "afb/core/error.hpp"

namespace afb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateHistogram: return "DegenerateHistogram";
    case ErrorCode::InitDegenerate: return "InitDegenerate";
    case ErrorCode::EmptyInformativeRegion: return "EmptyInformativeRegion";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ModelMissing: return "ModelMissing";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::SingularScatter: return "SingularScatter";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::MissingDir: return "MissingDir";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::UnreadableFile: return "UnreadableFile";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace afb
