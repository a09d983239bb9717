#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "locus/entity.hpp"
#include "locus/minilang/mutate.hpp"
#include "locus/minilang/project.hpp"
#include "locus/outcome.hpp"

namespace locus {

// How one test's outcome moved between the original program and a mutant.
// Only status changes count: a Fail with a different message is Unchanged,
// while Fail <-> Crash is FailChanged (still failing, but the mutant was
// observed). FailToPass and PassToFail treat Fail and Crash alike.
enum class OutcomeChange { Unchanged, FailToPass, PassToFail, FailChanged };

const char* outcome_change_name(OutcomeChange change);
OutcomeChange outcome_change_from_name(const std::string& name);
OutcomeChange classify_change(TestStatus baseline, TestStatus mutated);

struct KillRecord {
  std::string mutant_id;
  // One entry per test, in baseline test order.
  std::vector<std::pair<std::string, OutcomeChange>> changes;

  int f2p() const;     // failing -> passing
  int p2f() const;     // passing -> failing
  int f_kill() const;  // failing tests whose outcome changed (f2p + FailChanged)
  int p_kill() const;  // passing tests whose outcome changed (== p2f)
  bool killed() const { return f_kill() + p_kill() > 0; }
};

// Mutants restricted to statements covered by at least one failing test.
// `failing_covered` already excludes test-function lines.
std::vector<minilang::Mutant> generate_mutants(
    const minilang::Program& program, const std::set<Entity>& failing_covered,
    const std::set<minilang::MutOperator>& operators =
        minilang::default_mut_operators());

struct KillMatrixOptions {
  std::uint64_t step_budget = 1'000'000;
  int jobs = 1;
  // Must match the set used to generate the mutants (ids depend on it).
  std::set<minilang::MutOperator> operators = minilang::default_mut_operators();
};

// Runs every test against every mutant program. `baseline` maps test id to
// its original status; tests run in `tests` order. Records are returned in
// mutant order regardless of execution interleaving.
std::vector<KillRecord> build_kill_matrix(
    const minilang::Program& program,
    const std::vector<minilang::Mutant>& mutants,
    const std::vector<std::string>& tests,
    const std::map<std::string, TestStatus>& baseline,
    const KillMatrixOptions& options = {});

// Metallaxis: per-mutant f_kill / sqrt(F * (f_kill + p_kill)), 0 when
// f_kill = 0; a location scores the max over its mutants.
std::map<Entity, double> metallaxis(const std::vector<KillRecord>& kills,
                                    const std::vector<minilang::Mutant>& mutants,
                                    int total_failing, int total_passing);

// Muse: per-mutant f2p/F - alpha * p2f/P with
// alpha = (f2p_total / F) * (P / p2f_total) (0 when p2f_total or P is 0);
// a location scores the mean over its mutants.
std::map<Entity, double> muse(const std::vector<KillRecord>& kills,
                              const std::vector<minilang::Mutant>& mutants,
                              int total_failing, int total_passing);

}  // namespace locus
