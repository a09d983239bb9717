#include "locus/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "locus/errors.hpp"
#include "locus/granularity.hpp"
#include "locus/io/csv.hpp"
#include "locus/io/stages.hpp"
#include "locus/mbfl.hpp"
#include "locus/minilang/interp.hpp"
#include "locus/ps.hpp"
#include "locus/sbfl.hpp"
#include "locus/st.hpp"

namespace locus {

std::vector<std::string> discover_tests(const minilang::ProgramModel& model) {
  return model.test_ids();
}

EffectiveTests restrict_failing(const RunConfig& config,
                                const std::vector<std::string>& discovered) {
  EffectiveTests out;
  if (config.failing_list.empty()) {
    out.to_run = discovered;
    return out;
  }
  const std::set<std::string> known(discovered.begin(), discovered.end());
  for (const auto& test : config.failing_list) {
    if (!known.count(test))
      raise(ErrorCode::UnknownTest,
            "failing-list names unknown test \"" + test + "\"");
    out.designated_failing.insert(test);
  }
  if (config.family == Family::Ps || config.family == Family::St)
    out.to_run.assign(out.designated_failing.begin(),
                      out.designated_failing.end());
  else
    out.to_run = discovered;
  return out;
}

SpectrumMatrix designate_failing(const SpectrumMatrix& executed,
                                 const std::vector<std::string>& failing_list) {
  if (failing_list.empty()) return executed;
  const std::set<std::string> listed(failing_list.begin(), failing_list.end());
  std::set<std::string> seen;
  SpectrumMatrix out;
  for (const auto& record : executed.records()) {
    if (listed.count(record.test_id)) {
      if (!record.outcome.is_failing())
        raise(ErrorCode::NotActuallyFailing,
              "test \"" + record.test_id +
                  "\" was listed as failing but passed");
      seen.insert(record.test_id);
      out.add(record);
    } else if (!record.outcome.is_failing()) {
      out.add(record);
    }
    // Unlisted failing tests belong to some other fault; dropped.
  }
  for (const auto& test : listed)
    if (!seen.count(test))
      raise(ErrorCode::UnknownTest,
            "failing-list names unexecuted test \"" + test + "\"");
  return out;
}

Ranking finalize_ranking(const std::map<Entity, double>& stmt_scores,
                         Granularity granularity,
                         const std::vector<Entity>& function_entities) {
  if (granularity == Granularity::Function)
    return rank(to_function_granularity(stmt_scores, function_entities));
  return rank(stmt_scores);
}

namespace {

std::vector<StFunction> st_functions_of(const minilang::ProgramModel& model) {
  std::vector<StFunction> out;
  for (const auto& info : model.functions) {
    if (info.is_test) continue;
    out.push_back({info.qualified_name, info.file, info.decl_line,
                   info.end_line, info.own_lines});
  }
  return out;
}

SpectrumMatrix execute_tests(const minilang::ProgramModel& model,
                             const std::vector<std::string>& tests,
                             std::uint64_t step_budget, bool traced) {
  SpectrumMatrix matrix;
  minilang::ExecOptions options;
  options.step_budget = step_budget;
  options.trace_coverage = traced;
  for (const auto& test : tests) {
    const minilang::RunResult run = minilang::execute_test(model, test, options);
    ExecutionRecord record;
    record.test_id = test;
    record.outcome = run.outcome;
    if (traced) {
      for (const auto& [file, line] : run.covered_lines)
        if (!model.is_test_line(file, line))
          record.covered.push_back(Entity::statement(file, line));
    }
    matrix.add(std::move(record));
  }
  return matrix;
}

void check_listed_failing(const SpectrumMatrix& matrix,
                          const std::set<std::string>& listed) {
  if (listed.empty()) return;
  for (const auto& record : matrix.records())
    if (listed.count(record.test_id) && !record.outcome.is_failing())
      raise(ErrorCode::NotActuallyFailing,
            "test \"" + record.test_id +
                "\" was listed as failing but passed");
}

std::vector<std::string> failing_ids(const SpectrumMatrix& matrix) {
  std::vector<std::string> out;
  for (const auto& record : matrix.records())
    if (record.outcome.is_failing()) out.push_back(record.test_id);
  return out;
}

}  // namespace

FamilyRun run_family(const minilang::ProgramModel& model,
                     const RunConfig& config, io::RunStore* store) {
  const std::vector<std::string> discovered = discover_tests(model);
  const EffectiveTests effective = restrict_failing(config, discovered);
  const std::vector<Entity> fn_entities = model.target_function_entities();
  const std::vector<StFunction> st_functions = st_functions_of(model);

  const auto started = std::chrono::steady_clock::now();
  std::map<Technique, std::map<Entity, double>> stmt_scores;

  switch (config.family) {
    case Family::Sbfl: {
      const SpectrumMatrix executed =
          execute_tests(model, effective.to_run, config.step_budget, true);
      if (store) store->write_stage("tests.jsonl", io::spectrum_to_jsonl(executed));
      const SpectrumMatrix matrix =
          designate_failing(executed, config.failing_list);
      const SbflScores scores = sbfl_scores(matrix, config.dstar_exponent);
      stmt_scores[Technique::Tarantula] = scores.tarantula;
      stmt_scores[Technique::Ochiai] = scores.ochiai;
      stmt_scores[Technique::DStar] = scores.dstar;
      break;
    }
    case Family::Mbfl: {
      const SpectrumMatrix executed =
          execute_tests(model, effective.to_run, config.step_budget, true);
      if (store) store->write_stage("tests.jsonl", io::spectrum_to_jsonl(executed));
      const SpectrumMatrix matrix =
          designate_failing(executed, config.failing_list);
      if (matrix.failing_count() == 0)
        raise(ErrorCode::NoFailingTests,
              "fault localization needs at least one failing test");

      std::set<Entity> failing_covered;
      std::vector<std::string> order;
      std::map<std::string, TestStatus> baseline;
      for (const auto& record : matrix.records()) {
        order.push_back(record.test_id);
        baseline[record.test_id] = record.outcome.status;
        if (record.outcome.is_failing())
          failing_covered.insert(record.covered.begin(), record.covered.end());
      }

      const auto mutants = generate_mutants(model.program, failing_covered);
      if (store) store->write_stage("mutants.jsonl", io::mutants_to_jsonl(mutants));
      KillMatrixOptions kill_options;
      kill_options.step_budget = config.step_budget;
      kill_options.jobs = config.jobs;
      const auto kills = build_kill_matrix(model.program, mutants, order,
                                           baseline, kill_options);
      if (store) store->write_stage("kills.jsonl", io::kills_to_jsonl(kills));
      stmt_scores[Technique::Metallaxis] =
          metallaxis(kills, mutants, matrix.failing_count(),
                     matrix.passing_count());
      stmt_scores[Technique::Muse] = muse(kills, mutants,
                                          matrix.failing_count(),
                                          matrix.passing_count());
      break;
    }
    case Family::Ps: {
      const SpectrumMatrix executed =
          execute_tests(model, effective.to_run, config.step_budget, false);
      if (store) store->write_stage("tests.jsonl", io::spectrum_to_jsonl(executed));
      check_listed_failing(executed, effective.designated_failing);
      const std::vector<std::string> failing = failing_ids(executed);
      if (failing.empty())
        raise(ErrorCode::NoFailingTests,
              "fault localization needs at least one failing test");
      PsOptions options;
      options.step_budget = config.step_budget;
      options.max_flips_per_test = config.ps_budget;
      options.jobs = config.jobs;
      const PsResult result = ps_localize(model, failing, options);
      if (store) {
        store->write_stage("ps_instances.jsonl",
                           io::ps_instances_to_jsonl(result.instances));
        store->write_stage("ps_flips.jsonl", io::ps_flips_to_jsonl(result.flips));
      }
      stmt_scores[Technique::Ps] = ps_scores_from_flips(result.flips);
      break;
    }
    case Family::St: {
      const SpectrumMatrix executed =
          execute_tests(model, effective.to_run, config.step_budget, false);
      if (store) store->write_stage("tests.jsonl", io::spectrum_to_jsonl(executed));
      check_listed_failing(executed, effective.designated_failing);
      if (failing_ids(executed).empty())
        raise(ErrorCode::NoFailingTests,
              "fault localization needs at least one failing test");
      std::vector<std::pair<std::string, StackTrace>> traces;
      for (const auto& record : executed.records())
        if (record.outcome.status == TestStatus::Crash)
          traces.emplace_back(record.test_id, *record.outcome.stack_trace);
      if (store) store->write_stage("traces.jsonl", io::traces_to_jsonl(traces));
      stmt_scores[Technique::St] = st_statement_scores(traces, st_functions);
      break;
    }
  }

  FamilyRun run;
  for (const auto& [technique, scores] : stmt_scores) {
    run.scores[technique] = scores;
    run.rankings[technique] =
        finalize_ranking(scores, config.granularity, fn_entities);
    if (store)
      store->write_stage(
          std::string("scores_") + technique_name(technique) + ".csv",
          io::ranking_to_csv(run.rankings.at(technique)));
  }
  if (store)
    store->write_stage("functions.jsonl", io::functions_to_jsonl(st_functions));

  const auto finished = std::chrono::steady_clock::now();
  run.seconds = std::chrono::duration<double>(finished - started).count();

  if (store) {
    store->write_config(config);
    store->write_timings({{family_name(config.family), run.seconds}});
  }
  return run;
}

FamilyRun run_project(const RunConfig& config) {
  minilang::ProgramModel model = minilang::load_project_dir(config.src);
  if (config.output_dir.empty()) return run_family(model, config, nullptr);
  io::RunStore store = io::RunStore::create(config.output_dir);
  return run_family(model, config, &store);
}

}  // namespace locus
