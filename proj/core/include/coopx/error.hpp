#pragma once

#include <stdexcept>
#include <string>

namespace coopx {

enum class ErrorCode {
  MalformedSystem,
  DimensionMismatch,
  IndexOutOfRange,
  CapExceeded,
  CountMismatch,
  InvalidGame,
  OverlapAmbiguity,
  NotClosedManifold,
  NotIsolated,
  BoundaryTouchesBalanced,
  NotSimplicial,
  NotSphere,
  CoboundaryUnsolvable,
  MalformedInput,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every recoverable failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coopx
