#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locus/entity.hpp"
#include "locus/minilang/interp.hpp"
#include "locus/minilang/project.hpp"
#include "locus/outcome.hpp"
#include "locus/ranking.hpp"

namespace locus {

// A branch-condition location whose single-instance flip made at least one
// failing test pass.
struct CriticalPredicate {
  Entity location;
  std::set<std::string> fixed_tests;
  std::pair<std::string, int> witness;  // (test_id, instance_index)
};

// Outcome of one attempted flip.
struct FlipResult {
  std::string test_id;
  std::string file;
  int line = 0;
  int index = 0;
  TestStatus result = TestStatus::Fail;
};

// Dynamic branch-predicate instances of one (failing) test, in execution
// order.
std::vector<minilang::PredicateInstanceRec> record_instances(
    const minilang::ProgramModel& model, const std::string& test_id,
    std::uint64_t step_budget = 1'000'000);

// Re-executes the test with one predicate instance negated.
TestOutcome switch_and_run(const minilang::ProgramModel& model,
                           const std::string& test_id,
                           const minilang::FlipSpec& flip,
                           std::uint64_t step_budget = 1'000'000);

struct PsOptions {
  std::uint64_t step_budget = 1'000'000;
  int max_flips_per_test = 10'000;
  int jobs = 1;
};

struct PsResult {
  Ranking ranking;  // score = number of failing tests fixed
  std::vector<CriticalPredicate> criticals;
  std::map<std::string, std::vector<minilang::PredicateInstanceRec>> instances;
  std::vector<FlipResult> flips;  // every attempted flip, deterministic order
};

// Statement score = number of distinct failing tests fixed at the location;
// locations with no fixing flip are absent. Shared by live runs and replay.
std::map<Entity, double> ps_scores_from_flips(
    const std::vector<FlipResult>& flips);

// For each failing test, flips recorded instances one at a time,
// last-executed-first, up to the per-test budget. Instances inside test
// functions are not candidates. Every reported witness is re-checked by
// replaying its flip.
PsResult ps_localize(const minilang::ProgramModel& model,
                     const std::vector<std::string>& failing_tests,
                     const PsOptions& options = {});

}  // namespace locus
