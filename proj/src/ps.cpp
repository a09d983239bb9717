#include "locus/ps.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "locus/errors.hpp"

namespace locus {

std::vector<minilang::PredicateInstanceRec> record_instances(
    const minilang::ProgramModel& model, const std::string& test_id,
    std::uint64_t step_budget) {
  minilang::ExecOptions options;
  options.step_budget = step_budget;
  options.record_predicates = true;
  return minilang::execute_test(model, test_id, options).predicate_instances;
}

TestOutcome switch_and_run(const minilang::ProgramModel& model,
                           const std::string& test_id,
                           const minilang::FlipSpec& flip,
                           std::uint64_t step_budget) {
  minilang::ExecOptions options;
  options.step_budget = step_budget;
  options.flip = flip;
  return minilang::execute_test(model, test_id, options).outcome;
}

std::map<Entity, double> ps_scores_from_flips(
    const std::vector<FlipResult>& flips) {
  std::map<Entity, std::set<std::string>> fixed;
  for (const auto& flip : flips)
    if (flip.result == TestStatus::Pass)
      fixed[Entity::statement(flip.file, flip.line)].insert(flip.test_id);
  std::map<Entity, double> scores;
  for (const auto& [entity, tests] : fixed)
    scores[entity] = static_cast<double>(tests.size());
  return scores;
}

PsResult ps_localize(const minilang::ProgramModel& model,
                     const std::vector<std::string>& failing_tests,
                     const PsOptions& options) {
  PsResult result;
  std::map<Entity, CriticalPredicate> criticals;

  for (const auto& test : failing_tests) {
    auto instances = record_instances(model, test, options.step_budget);
    result.instances[test] = instances;

    // Candidates are target-program predicates, tried last-executed-first.
    std::vector<minilang::PredicateInstanceRec> candidates;
    for (auto it = instances.rbegin(); it != instances.rend(); ++it) {
      if (model.is_test_line(it->file, it->line)) continue;
      if (static_cast<int>(candidates.size()) >= options.max_flips_per_test)
        break;
      candidates.push_back(*it);
    }

    std::vector<TestStatus> statuses(candidates.size());
    auto flip_one = [&](std::size_t i) {
      const auto& candidate = candidates[i];
      statuses[i] =
          switch_and_run(model, test,
                         {candidate.file, candidate.line, candidate.index},
                         options.step_budget)
              .status;
    };
    if (options.jobs <= 1 || candidates.size() < 2) {
      for (std::size_t i = 0; i < candidates.size(); ++i) flip_one(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      const int n =
          std::min<int>(options.jobs, static_cast<int>(candidates.size()));
      for (int w = 0; w < n; ++w)
        workers.emplace_back([&]() {
          for (std::size_t i = next.fetch_add(1); i < candidates.size();
               i = next.fetch_add(1))
            flip_one(i);
        });
      for (auto& worker : workers) worker.join();
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& candidate = candidates[i];
      result.flips.push_back(
          {test, candidate.file, candidate.line, candidate.index, statuses[i]});
      if (statuses[i] != TestStatus::Pass) continue;
      const Entity location =
          Entity::statement(candidate.file, candidate.line);
      auto [it, inserted] = criticals.try_emplace(location);
      if (inserted) {
        it->second.location = location;
        it->second.witness = {test, candidate.index};
      }
      it->second.fixed_tests.insert(test);
    }
  }

  for (auto& [location, critical] : criticals) {
    // Soundness check: the recorded witness must replay to a passing run.
    const auto replayed =
        switch_and_run(model, critical.witness.first,
                       {location.file, location.line, critical.witness.second},
                       options.step_budget);
    if (replayed.status != TestStatus::Pass)
      raise(ErrorCode::FormatError,
            "predicate switching witness failed to replay at " +
                location.render());
    result.criticals.push_back(critical);
  }

  result.ranking = rank(ps_scores_from_flips(result.flips));
  return result;
}

}  // namespace locus
