// locus - fault localization for ml1 projects.
//
// Subcommands:
//   locus run    run a family's pipeline on a project and emit ranked CSVs
//   locus score  score pre-collected data (a run store or external files)
//   locus eval   compare rankings against ground truth over a corpus

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "locus/errors.hpp"
#include "locus/eval/harness.hpp"
#include "locus/io/csv.hpp"
#include "locus/io/replay.hpp"
#include "locus/io/run_store.hpp"
#include "locus/io/stages.hpp"
#include "locus/mbfl.hpp"
#include "locus/pipeline.hpp"
#include "locus/ps.hpp"
#include "locus/sbfl.hpp"
#include "locus/st.hpp"

namespace fs = std::filesystem;
using namespace locus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoFailingTests = 1;
constexpr int kExitError = 2;

// Comma-separated ids, or a file (one id per line) when the value names one.
std::vector<std::string> parse_failing_list(const std::string& value) {
  std::vector<std::string> out;
  if (value.empty()) return out;
  if (fs::is_regular_file(value)) {
    std::ifstream in(value);
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (!line.empty()) out.push_back(line);
    }
    return out;
  }
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_rankings(const std::map<Technique, Ranking>& rankings,
                    const std::string& output_dir) {
  for (const auto& [technique, ranking] : rankings) {
    std::cout << technique_name(technique) << ": " << ranking.entries.size()
              << " entities";
    const auto top = ranking.top_rank_set();
    if (!top.empty()) {
      std::cout << ", top rank:";
      for (const auto& entity : top) std::cout << " " << entity.render();
    }
    std::cout << "\n  -> "
              << (fs::path(output_dir) /
                  (std::string("scores_") + technique_name(technique) + ".csv"))
                     .string()
              << "\n";
  }
}

int run_command(const RunConfig& config) {
  const FamilyRun run = run_project(config);
  std::cout << "family " << family_name(config.family) << " finished in "
            << run.seconds << " s\n";
  print_rankings(run.rankings, config.output_dir);
  return kExitOk;
}

struct ScoreArgs {
  std::string from_store;
  std::string spectrum;
  std::string mutants;
  std::string kills;
  std::string traces;
  std::string flips;
  std::string functions;
  std::string src;
  RunConfig config;
};

int score_command(const ScoreArgs& args) {
  if (!args.from_store.empty()) {
    io::RunStore store = io::RunStore::open(args.from_store);
    const RunConfig stored = store.read_config();
    io::RunStore out = io::RunStore::create(args.config.output_dir);
    std::map<Technique, Ranking> rankings;
    for (Technique technique : family_techniques(stored.family)) {
      Ranking ranking = io::replay(args.from_store, technique);
      out.write_stage(std::string("scores_") + technique_name(technique) +
                          ".csv",
                      io::ranking_to_csv(ranking));
      rankings[technique] = std::move(ranking);
    }
    print_rankings(rankings, args.config.output_dir);
    return kExitOk;
  }

  // External files: score without executing anything.
  std::vector<Entity> fn_entities;
  std::vector<StFunction> functions;
  if (!args.functions.empty()) {
    functions = io::read_functions(args.functions);
  } else if (!args.src.empty()) {
    const auto model = minilang::load_project_dir(args.src);
    for (const auto& info : model.functions)
      if (!info.is_test)
        functions.push_back({info.qualified_name, info.file, info.decl_line,
                             info.end_line, info.own_lines});
  }
  for (const auto& fn : functions)
    fn_entities.push_back(
        Entity::function(fn.file, fn.name, fn.start_line, fn.end_line));

  std::map<Technique, std::map<Entity, double>> stmt_scores;
  if (!args.traces.empty()) {
    stmt_scores[Technique::St] =
        st_statement_scores(io::read_traces(args.traces), functions);
  } else if (!args.flips.empty()) {
    std::ifstream in(args.flips, std::ios::binary);
    if (!in) raise(ErrorCode::IoFailure, "cannot read " + args.flips);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    stmt_scores[Technique::Ps] =
        ps_scores_from_flips(io::ps_flips_from_jsonl(buffer.str()));
  } else if (!args.kills.empty()) {
    if (args.spectrum.empty() || args.mutants.empty())
      raise(ErrorCode::FormatError,
            "scoring kills needs --spectrum and --mutants too");
    const SpectrumMatrix matrix = designate_failing(
        io::read_spectrum(args.spectrum), args.config.failing_list);
    if (matrix.failing_count() == 0)
      raise(ErrorCode::NoFailingTests, "spectrum has no failing test");
    std::ifstream in(args.mutants, std::ios::binary);
    if (!in) raise(ErrorCode::IoFailure, "cannot read " + args.mutants);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const auto mutants = io::mutants_from_jsonl(buffer.str());
    std::ifstream kin(args.kills, std::ios::binary);
    if (!kin) raise(ErrorCode::IoFailure, "cannot read " + args.kills);
    std::ostringstream kbuffer;
    kbuffer << kin.rdbuf();
    const auto kills = io::kills_from_jsonl(kbuffer.str());
    stmt_scores[Technique::Metallaxis] = metallaxis(
        kills, mutants, matrix.failing_count(), matrix.passing_count());
    stmt_scores[Technique::Muse] =
        muse(kills, mutants, matrix.failing_count(), matrix.passing_count());
  } else if (!args.spectrum.empty()) {
    const SpectrumMatrix matrix = designate_failing(
        io::read_spectrum(args.spectrum), args.config.failing_list);
    const SbflScores scores =
        sbfl_scores(matrix, args.config.dstar_exponent);
    stmt_scores[Technique::Tarantula] = scores.tarantula;
    stmt_scores[Technique::Ochiai] = scores.ochiai;
    stmt_scores[Technique::DStar] = scores.dstar;
  } else {
    raise(ErrorCode::FormatError,
          "nothing to score: pass --from, --spectrum, --kills, --traces or "
          "--flips");
  }

  io::RunStore out = io::RunStore::create(args.config.output_dir);
  std::map<Technique, Ranking> rankings;
  for (const auto& [technique, scores] : stmt_scores) {
    Ranking ranking =
        finalize_ranking(scores, args.config.granularity, fn_entities);
    out.write_stage(std::string("scores_") + technique_name(technique) +
                        ".csv",
                    io::ranking_to_csv(ranking));
    rankings[technique] = std::move(ranking);
  }
  print_rankings(rankings, args.config.output_dir);
  return kExitOk;
}

int eval_command(const std::string& corpus_path, const RunConfig& config,
                 int n) {
  const auto corpus = eval::load_corpus(corpus_path);
  const auto report = eval::evaluate_corpus(corpus, config, n);
  std::cout << eval::report_to_table(report);
  if (!config.output_dir.empty()) {
    io::RunStore store = io::RunStore::create(config.output_dir);
    store.write_stage("eval_report.csv", eval::report_to_csv(report));
    std::cout << "report -> "
              << (fs::path(config.output_dir) / "eval_report.csv").string()
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locus - multi-family fault localization for ml1 projects"};
  app.require_subcommand(1);

  RunConfig config;
  std::string family = "sbfl";
  std::string granularity = "statement";
  std::string failing_list;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "sbfl | mbfl | ps | st");
    cmd->add_option("--granularity", granularity, "statement | function");
    cmd->add_option("--dstar-exponent", config.dstar_exponent,
                    "DStar exponent (default 2)");
    cmd->add_option("--ps-budget", config.ps_budget,
                    "max predicate flips per failing test");
    cmd->add_option("--step-budget", config.step_budget,
                    "interpreter step budget per execution");
    cmd->add_option("--jobs", config.jobs, "parallel executions (default 1)");
  };

  CLI::App* run = app.add_subcommand("run", "run fault localization");
  run->add_option("--src", config.src, "project directory with .ml1 files")
      ->required();
  run->add_option("--failing-list", failing_list,
                  "comma-separated test ids, or a file with one id per line");
  run->add_option("--output", config.output_dir, "run store directory");
  add_common(run);

  ScoreArgs score;
  CLI::App* score_cmd =
      app.add_subcommand("score", "score pre-collected data");
  score_cmd->add_option("--from", score.from_store, "existing run store");
  score_cmd->add_option("--spectrum", score.spectrum, "tests.jsonl file");
  score_cmd->add_option("--mutants", score.mutants, "mutants.jsonl file");
  score_cmd->add_option("--kills", score.kills, "kills.jsonl file");
  score_cmd->add_option("--traces", score.traces, "traces.jsonl file");
  score_cmd->add_option("--flips", score.flips, "ps_flips.jsonl file");
  score_cmd->add_option("--functions", score.functions,
                        "functions.jsonl file (for --traces)");
  score_cmd->add_option("--src", score.src,
                        "project directory (alternative to --functions)");
  score_cmd->add_option("--failing-list", failing_list,
                        "designated failing tests");
  score_cmd->add_option("--output", config.output_dir, "output directory");
  add_common(score_cmd);

  std::string corpus_path;
  int n = 5;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate against ground truth");
  eval_cmd->add_option("--corpus", corpus_path, "corpus manifest JSON")
      ->required();
  eval_cmd->add_option("--at-n", n, "rank cutoff for the @n count");
  eval_cmd->add_option("--output", config.output_dir, "report directory");
  add_common(eval_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    config.family = family_from_name(family);
    config.granularity = granularity_from_name(granularity);
    config.failing_list = parse_failing_list(failing_list);
    if (config.output_dir.empty()) config.output_dir = "locus-out";

    if (run->parsed()) return run_command(config);
    if (score_cmd->parsed()) {
      score.config = config;
      return score_command(score);
    }
    return eval_command(corpus_path, config, n);
  } catch (const Error& error) {
    std::cerr << "locus: " << error_code_name(error.code()) << ": "
              << error.what() << "\n";
    return error.code() == ErrorCode::NoFailingTests ? kExitNoFailingTests
                                                     : kExitError;
  } catch (const std::exception& error) {
    std::cerr << "locus: " << error.what() << "\n";
    return kExitError;
  }
}
