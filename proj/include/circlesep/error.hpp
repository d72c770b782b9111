#pragma once

#include <stdexcept>
#include <string>

namespace circlesep {

enum class ErrorCode {
  PoleProjection,
  NotGeneralPosition,
  IndexOutOfRange,
  SizeMismatch,
  UnsupportedSize,
  InternalInconsistency,
  WrongOrder,
  IdenticallyDegeneratePath,
  NotSemigeneral,
  TangentialTouch,
  NonLocalChange,
  RetriesExhausted,
  Parse,
  Io,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; the code carries the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circlesep
