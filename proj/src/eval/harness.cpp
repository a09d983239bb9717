#include "locus/eval/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "locus/errors.hpp"
#include "locus/io/csv.hpp"
#include "locus/io/run_store.hpp"
#include "locus/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace locus::eval {

namespace {

bool same_identity(const Entity& a, const Entity& b) {
  if (a.kind != b.kind || a.file != b.file) return false;
  if (a.kind == EntityKind::Statement) return a.line == b.line;
  return a.name == b.name;
}

}  // namespace

double expected_rank(const Ranking& ranking, const GroundTruth& truth) {
  double best = std::numeric_limits<double>::infinity();
  for (const Entity& faulty : truth.faulty) {
    for (const auto& entry : ranking.entries) {
      if (!same_identity(entry.entity, faulty)) continue;
      int above = 0;
      int ties = 0;
      for (const auto& other : ranking.entries) {
        if (other.score > entry.score) ++above;
        if (other.score == entry.score) ++ties;
      }
      best = std::min(best, above + (ties + 1) / 2.0);
      break;
    }
  }
  return best;
}

int at_n(const std::map<std::string, Ranking>& rankings,
         const std::map<std::string, GroundTruth>& truths, int n) {
  int count = 0;
  for (const auto& [bug_id, truth] : truths) {
    auto it = rankings.find(bug_id);
    if (it == rankings.end())
      raise(ErrorCode::MissingBug, "no ranking for bug \"" + bug_id + "\"");
    if (expected_rank(it->second, truth) <= n) ++count;
  }
  return count;
}

std::map<std::string, double> time_report(const std::string& store_dir) {
  return io::RunStore::open(store_dir).read_timings();
}

std::vector<CorpusEntry> load_corpus(const std::string& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, "cannot read " + manifest_path);
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::parse_error& error) {
    raise(ErrorCode::FormatError,
          manifest_path + ": " + std::string(error.what()));
  }
  if (!manifest.is_array())
    raise(ErrorCode::FormatError, manifest_path + ": expected a JSON array");

  const fs::path base = fs::path(manifest_path).parent_path();
  std::vector<CorpusEntry> corpus;
  for (const auto& item : manifest) {
    CorpusEntry entry;
    entry.bug_id = item.at("bug_id").get<std::string>();
    entry.truth.bug_id = entry.bug_id;
    entry.source_paths.push_back(
        (base / item.at("program").get<std::string>()).string());
    entry.source_paths.push_back(
        (base / item.at("tests").get<std::string>()).string());
    for (const auto& g : item.at("ground_truth")) {
      const std::string file = g.at("file").get<std::string>();
      if (g.contains("function"))
        entry.truth.faulty.push_back(
            Entity::function(file, g.at("function").get<std::string>(), 0, 0));
      else
        entry.truth.faulty.push_back(
            Entity::statement(file, g.at("line").get<int>()));
    }
    if (entry.truth.faulty.empty())
      raise(ErrorCode::FormatError,
            manifest_path + ": bug \"" + entry.bug_id +
                "\" has no ground truth entities");
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

EvalReport evaluate_corpus(const std::vector<CorpusEntry>& corpus,
                           const RunConfig& base_config, int n) {
  EvalReport report;
  report.family = base_config.family;
  report.n = n;

  std::map<Technique, std::map<std::string, Ranking>> rankings;
  std::map<std::string, GroundTruth> truths;
  for (const auto& entry : corpus) {
    const minilang::ProgramModel model =
        minilang::load_project_files(entry.source_paths);
    RunConfig config = base_config;
    config.src = entry.source_paths.front();
    FamilyRun run;
    if (base_config.output_dir.empty()) {
      run = run_family(model, config, nullptr);
    } else {
      config.output_dir =
          (fs::path(base_config.output_dir) / entry.bug_id).string();
      io::RunStore store = io::RunStore::create(config.output_dir);
      run = run_family(model, config, &store);
    }

    truths[entry.bug_id] = entry.truth;
    BugResult result;
    result.bug_id = entry.bug_id;
    for (const auto& [technique, ranking] : run.rankings) {
      rankings[technique][entry.bug_id] = ranking;
      result.expected_ranks[technique] = expected_rank(ranking, entry.truth);
    }
    report.bugs.push_back(std::move(result));
  }

  for (const auto& [technique, per_bug] : rankings)
    report.at_n_counts[technique] = at_n(per_bug, truths, report.n);
  return report;
}

namespace {

std::string format_rank(double value) {
  if (std::isinf(value)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

}  // namespace

std::string report_to_csv(const EvalReport& report) {
  std::string out = "bug_id,technique,expected_rank,within_at_n\n";
  for (const auto& bug : report.bugs) {
    for (const auto& [technique, value] : bug.expected_ranks) {
      out += bug.bug_id;
      out += ",";
      out += technique_name(technique);
      out += ",";
      out += format_rank(value);
      out += ",";
      out += value <= report.n ? "1" : "0";
      out += "\n";
    }
  }
  return out;
}

std::string report_to_table(const EvalReport& report) {
  std::ostringstream out;
  out << "family " << family_name(report.family) << ", @" << report.n
      << " counts\n";
  for (const auto& bug : report.bugs) {
    out << "  " << bug.bug_id << ":";
    for (const auto& [technique, value] : bug.expected_ranks)
      out << "  " << technique_name(technique) << "=" << format_rank(value);
    out << "\n";
  }
  out << "  @" << report.n << ":";
  for (const auto& [technique, count] : report.at_n_counts)
    out << "  " << technique_name(technique) << "=" << count;
  out << "\n";
  return out.str();
}

}  // namespace locus::eval
