#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locus/minilang/project.hpp"
#include "locus/outcome.hpp"

namespace locus::minilang {

// Forces the boolean result of the index-th dynamic evaluation of the
// branch condition at (file, line) to its negation. Indexes count per
// location, 0-based, in execution order.
struct FlipSpec {
  std::string file;
  int line = 0;
  int index = 0;
};

struct ExecOptions {
  std::optional<FlipSpec> flip;
  std::uint64_t step_budget = 1'000'000;
  bool trace_coverage = false;
  bool record_predicates = false;
  // Test hook: called once per executed statement, before it runs.
  std::function<void(const std::string& file, int line)> on_statement;
};

struct PredicateInstanceRec {
  std::string file;
  int line = 0;
  int index = 0;        // per-location occurrence count within the run
  bool observed = false;  // outcome actually used (post-flip if flipped)

  friend bool operator==(const PredicateInstanceRec& a,
                         const PredicateInstanceRec& b) {
    return a.file == b.file && a.line == b.line && a.index == b.index &&
           a.observed == b.observed;
  }
};

struct RunResult {
  locus::TestOutcome outcome;
  std::vector<std::pair<std::string, int>> covered_lines;  // sorted, unique
  std::vector<PredicateInstanceRec> predicate_instances;   // execution order
  std::uint64_t steps_used = 0;
};

// Runs one `test_*` function to completion. Deterministic: identical
// (program, test, options) yields an identical RunResult. Assertion
// violations and resource exhaustion (step budget, call depth) are Fail;
// runtime errors (sqrt/pow domain, division by zero, type errors, unbound
// names) are Crash and carry the full call stack, innermost frame first.
// Throws UnknownTest if `test_name` is not a runnable test.
RunResult execute_test(const ProgramModel& model, const std::string& test_name,
                       const ExecOptions& options = {});

}  // namespace locus::minilang
