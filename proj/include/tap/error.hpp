#pragma once

#include <stdexcept>
#include <string>

namespace tap {

enum class ErrorCode {
  DisconnectedTree,
  CycleDetected,
  UnknownVertex,
  UnknownEdge,
  UnknownLink,
  NegativeCost,
  SelfLoopLink,
  DuplicateId,
  UncoverableEdge,
  EvenBoundary,
  TooLarge,
  MalformedProblem,
  NotFeasible,
  NotStarShaped,
  Infeasible,
  LevelOutOfRange,
  NotLeafToLeaf,
  ParseError,
};

const char* error_code_name(ErrorCode code);

// All recoverable failures surface as Error; the code maps to a stable
// machine-readable name and the detail names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tap
