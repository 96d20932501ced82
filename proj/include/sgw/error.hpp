#pragma once

#include <stdexcept>
#include <string>

namespace sgw {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  BadSign,
  NotAWalk,
  DifferentUnderlyingGraph,
  NotACycle,
  EmptyList,
  IndexOutOfRange,
  Disconnected,
  NoEdges,
  OrderTooLarge,
  BoundExceeded,
  TooLarge,
  BadParameter,
  NotAGrid,
  TooManyRows,
  GuardExceeded,
  Parse,
  InternalInvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the chromatic search when the requested bound or the target cap is
// exceeded. Carries the best interval known when the search stopped.
class BoundExceededError : public Error {
 public:
  BoundExceededError(int lower, int upper, const std::string& what)
      : Error(ErrorCode::BoundExceeded, what), lower_(lower), upper_(upper) {}

  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

}  // namespace sgw
