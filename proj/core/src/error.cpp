#include "fujita/error.hpp"

namespace fujita {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddResolution: return "OddResolution";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::PoisonedField: return "PoisonedField";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonLocallyIntegrableWeight: return "NonLocallyIntegrableWeight";
    case ErrorCode::ResolutionError: return "ResolutionError";
    case ErrorCode::NonContraction: return "NonContraction";
    case ErrorCode::SupportClipped: return "SupportClipped";
    case ErrorCode::TrajectoryTooShort: return "TrajectoryTooShort";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fujita
