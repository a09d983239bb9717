#pragma once

#include <map>
#include <string>
#include <vector>

#include "locus/entity.hpp"
#include "locus/ranking.hpp"
#include "locus/run_config.hpp"

namespace locus::eval {

struct GroundTruth {
  std::string bug_id;
  std::vector<Entity> faulty;  // nonempty
};

// Expected 1-based inspection position of the best faulty entity under a
// uniform random order inside its tie group: g + (t+1)/2, where g entities
// score strictly higher and the tie group has size t. +infinity when no
// faulty entity appears in the ranking.
double expected_rank(const Ranking& ranking, const GroundTruth& truth);

// Number of bugs with expected_rank <= n. Throws MissingBug when a truth's
// bug id has no ranking.
int at_n(const std::map<std::string, Ranking>& rankings,
         const std::map<std::string, GroundTruth>& truths, int n = 5);

// Per-family wall-clock seconds from a run store's timing stage.
std::map<std::string, double> time_report(const std::string& store_dir);

// Corpus manifest: JSON array of
//   {"bug_id":..., "program":..., "tests":...,
//    "ground_truth":[{"file":...,"line":...} | {"file":...,"function":...}]}
// with paths relative to the manifest file.
struct CorpusEntry {
  std::string bug_id;
  std::vector<std::string> source_paths;  // program file(s) then tests file(s)
  GroundTruth truth;
};
std::vector<CorpusEntry> load_corpus(const std::string& manifest_path);

struct BugResult {
  std::string bug_id;
  std::map<Technique, double> expected_ranks;
};

struct EvalReport {
  Family family = Family::Sbfl;
  int n = 5;
  std::vector<BugResult> bugs;
  std::map<Technique, int> at_n_counts;
};

// Runs the family pipeline on every corpus entry and scores the rankings
// against ground truth.
EvalReport evaluate_corpus(const std::vector<CorpusEntry>& corpus,
                           const RunConfig& base_config, int n = 5);

std::string report_to_csv(const EvalReport& report);
std::string report_to_table(const EvalReport& report);

}  // namespace locus::eval
