#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idyn {

enum class ErrorCode {
  InvalidGroundSet,
  SubsetOutOfRange,
  UnknownPoint,
  MissingEmpty,
  MissingFull,
  NotUnionClosed,
  NotIntersectionClosed,
  MapNotTotal,
  GroundMismatch,
  ImproperIdeal,
  DiscontinuousMap,
  SizeTooLarge,
  UnknownFlag,
  Parse,
  Usage,
};

std::string_view to_string(ErrorCode code);

/// Base exception for all library errors; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace idyn
