#pragma once

#include <stdexcept>
#include <string>

namespace lfsweep {

// Error categories shared across the library. The CLI prints the category
// name next to the message so scripted callers can match on it.
enum class ErrorCode {
  DimensionMismatch,
  NonMonotoneDepths,
  NegativeIntensity,
  NonFinite,
  InvalidRange,
  InvalidNA,
  EtaNotSampled,
  DepthMismatch,
  MissingMetadata,
  MixedDimensions,
  UnsupportedBitDepth,
  BadMagic,
  VersionUnsupported,
  TruncatedFile,
  IoFailure,
  BadConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// First violated invariant reported by validate().
struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

}  // namespace lfsweep
