#pragma once

#include <stdexcept>
#include <string>

namespace ptu {

enum class ErrorCode {
  IoError,
  ParseError,
  InvalidParam,
  DegenerateInput,
  DisconnectedGraph,
  RankDeficient,
  NeighborhoodTooSmall,
  NotAPath,
  ZeroProjection,
  EigFailure,
  DegenerateSpectrum,
  DegenerateConfig,
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

}  // namespace ptu
