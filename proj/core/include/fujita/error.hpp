#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fujita {

enum class ErrorCode {
  OddResolution,
  InvalidGrid,
  GridMismatch,
  PoisonedField,
  InvalidArgument,
  NonLocallyIntegrableWeight,
  ResolutionError,
  NonContraction,
  SupportClipped,
  TrajectoryTooShort,
  IoError,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fujita
