#pragma once

#include <map>
#include <string>

#include "locus/run_config.hpp"

namespace locus::io {

// A run's intermediate-result store: a directory of append-only stage files
// from which every final CSV can be re-derived. Stage names are fixed:
// tests.jsonl, mutants.jsonl, kills.jsonl, ps_instances.jsonl,
// ps_flips.jsonl, traces.jsonl, functions.jsonl, config.json, timings.json,
// and scores_<technique>.csv per technique.
class RunStore {
 public:
  // Opens an existing store directory, or creates it for writing.
  static RunStore create(const std::string& dir);
  static RunStore open(const std::string& dir);

  const std::string& dir() const { return dir_; }
  std::string stage_path(const std::string& stage) const;
  bool has_stage(const std::string& stage) const;

  void write_stage(const std::string& stage, const std::string& content);
  // Throws MissingStage when absent.
  std::string read_stage(const std::string& stage) const;

  void write_config(const RunConfig& config);
  RunConfig read_config() const;

  void write_timings(const std::map<std::string, double>& family_seconds);
  std::map<std::string, double> read_timings() const;

 private:
  explicit RunStore(std::string dir) : dir_(std::move(dir)) {}
  std::string dir_;
};

}  // namespace locus::io
