#include "lfsweep/error.hpp"

namespace lfsweep {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonMonotoneDepths: return "NonMonotoneDepths";
    case ErrorCode::NegativeIntensity: return "NegativeIntensity";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InvalidNA: return "InvalidNA";
    case ErrorCode::EtaNotSampled: return "EtaNotSampled";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::MissingMetadata: return "MissingMetadata";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::UnsupportedBitDepth: return "UnsupportedBitDepth";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace lfsweep
