#pragma once

#include <optional>
#include <string>
#include <vector>

namespace locus {

enum class TestStatus { Pass, Fail, Crash };

const char* test_status_name(TestStatus status);
TestStatus test_status_from_name(const std::string& name);

// One active function at the moment of a crash. Frames are ordered innermost
// (raising site) first.
struct Frame {
  std::string function;  // qualified name
  std::string file;
  int line = 0;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.function == b.function && a.file == b.file && a.line == b.line;
  }
};

struct StackTrace {
  std::vector<Frame> frames;  // innermost first, nonempty for a crash

  friend bool operator==(const StackTrace& a, const StackTrace& b) {
    return a.frames == b.frames;
  }
};

// Outcome of one test execution. Fail and Crash both count as "failing";
// only Crash carries a stack trace.
struct TestOutcome {
  TestStatus status = TestStatus::Pass;
  std::string failure_detail;  // empty when passing
  std::optional<StackTrace> stack_trace;

  bool is_failing() const { return status != TestStatus::Pass; }

  static TestOutcome pass() { return {}; }
  static TestOutcome fail(std::string detail) {
    return {TestStatus::Fail, std::move(detail), std::nullopt};
  }
  static TestOutcome crash(std::string detail, StackTrace trace) {
    return {TestStatus::Crash, std::move(detail), std::move(trace)};
  }

  friend bool operator==(const TestOutcome& a, const TestOutcome& b) {
    return a.status == b.status && a.failure_detail == b.failure_detail &&
           a.stack_trace == b.stack_trace;
  }
};

}  // namespace locus
