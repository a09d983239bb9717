#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "locus/io/run_store.hpp"
#include "locus/minilang/project.hpp"
#include "locus/ranking.hpp"
#include "locus/run_config.hpp"
#include "locus/spectrum.hpp"

namespace locus {

// Sorted ids of runnable tests in the project.
std::vector<std::string> discover_tests(const minilang::ProgramModel& model);

// Which tests a run executes. With a failing list, ST and PS touch only the
// listed tests; SBFL and MBFL run everything but treat the listed tests as
// the designated failing set (an unlisted test that fails is dropped from
// the matrix, and a listed test that passes is NotActuallyFailing).
struct EffectiveTests {
  std::vector<std::string> to_run;
  std::set<std::string> designated_failing;  // empty -> no restriction
};
EffectiveTests restrict_failing(const RunConfig& config,
                                const std::vector<std::string>& discovered);

// Applies a failing-list designation to executed records: listed tests must
// have failed (NotActuallyFailing otherwise) and unlisted failing tests are
// dropped, so every remaining failure refers to the designated fault.
SpectrumMatrix designate_failing(const SpectrumMatrix& executed,
                                 const std::vector<std::string>& failing_list);

// Statement scores -> requested granularity -> ranking. Shared by live runs
// and replay so both serialize byte-equal.
Ranking finalize_ranking(const std::map<Entity, double>& stmt_scores,
                         Granularity granularity,
                         const std::vector<Entity>& function_entities);

struct FamilyRun {
  std::map<Technique, std::map<Entity, double>> scores;  // statement level
  std::map<Technique, Ranking> rankings;                 // post-granularity
  double seconds = 0.0;  // analysis wall-clock for the family
};

// Executes the whole pipeline for the configured family: run tests, collect
// the family's evidence (coverage / mutants / predicate flips / stack
// traces), score every technique in the family, and persist each stage plus
// one scores_<technique>.csv into the store when one is given.
FamilyRun run_family(const minilang::ProgramModel& model,
                     const RunConfig& config, io::RunStore* store);

// Convenience wrapper: load the project at config.src, create the store at
// config.output_dir, run the family.
FamilyRun run_project(const RunConfig& config);

}  // namespace locus
