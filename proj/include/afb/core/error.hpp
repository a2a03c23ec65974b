#pragma once

#include <stdexcept>
#include <string>

namespace afb {

// Error taxonomy shared by all modules. The CLI maps categories to exit
// codes: input errors -> 1, model errors -> 2, invariant violations -> 3.
enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DegenerateHistogram,
  InitDegenerate,
  EmptyInformativeRegion,
  SingleClass,
  NoConvergence,
  ModelMissing,
  InsufficientData,
  SingularScatter,
  DegenerateData,
  InvalidGeometry,
  MissingDir,
  BadDimensions,
  UnreadableFile,
  IndexMismatch,
  IoError,
  InvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace afb
