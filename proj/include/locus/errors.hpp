#pragma once

#include <stdexcept>
#include <string>

namespace locus {

// Every recoverable failure in the toolkit is reported through one exception
// type carrying a stable code, so callers (CLI, tests) can match on the code
// instead of parsing messages.
enum class ErrorCode {
  NoFailingTests,
  OverlappingSpans,
  ParseFailure,
  UnknownTest,
  UnknownFunction,
  FormatError,
  DuplicateTest,
  MissingStage,
  IoFailure,
  NotActuallyFailing,
  MissingBug,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace locus
