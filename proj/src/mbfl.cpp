#include "locus/mbfl.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "locus/errors.hpp"
#include "locus/minilang/interp.hpp"

namespace locus {

const char* outcome_change_name(OutcomeChange change) {
  switch (change) {
    case OutcomeChange::Unchanged: return "unchanged";
    case OutcomeChange::FailToPass: return "f2p";
    case OutcomeChange::PassToFail: return "p2f";
    case OutcomeChange::FailChanged: return "fail_changed";
  }
  return "unchanged";
}

OutcomeChange outcome_change_from_name(const std::string& name) {
  if (name == "unchanged") return OutcomeChange::Unchanged;
  if (name == "f2p") return OutcomeChange::FailToPass;
  if (name == "p2f") return OutcomeChange::PassToFail;
  if (name == "fail_changed") return OutcomeChange::FailChanged;
  raise(ErrorCode::FormatError, "unknown outcome change \"" + name + "\"");
}

OutcomeChange classify_change(TestStatus baseline, TestStatus mutated) {
  const bool was_failing = baseline != TestStatus::Pass;
  const bool now_failing = mutated != TestStatus::Pass;
  if (was_failing && !now_failing) return OutcomeChange::FailToPass;
  if (!was_failing && now_failing) return OutcomeChange::PassToFail;
  if (was_failing && baseline != mutated) return OutcomeChange::FailChanged;
  return OutcomeChange::Unchanged;
}

int KillRecord::f2p() const {
  int n = 0;
  for (const auto& [test, change] : changes)
    if (change == OutcomeChange::FailToPass) ++n;
  return n;
}

int KillRecord::p2f() const {
  int n = 0;
  for (const auto& [test, change] : changes)
    if (change == OutcomeChange::PassToFail) ++n;
  return n;
}

int KillRecord::f_kill() const {
  int n = 0;
  for (const auto& [test, change] : changes)
    if (change == OutcomeChange::FailToPass ||
        change == OutcomeChange::FailChanged)
      ++n;
  return n;
}

int KillRecord::p_kill() const { return p2f(); }

std::vector<minilang::Mutant> generate_mutants(
    const minilang::Program& program, const std::set<Entity>& failing_covered,
    const std::set<minilang::MutOperator>& operators) {
  std::vector<minilang::Mutant> out;
  for (auto& [mutant, mutated] : minilang::mutate(program, operators))
    if (failing_covered.count(mutant.location)) out.push_back(mutant);
  return out;
}

std::vector<KillRecord> build_kill_matrix(
    const minilang::Program& program,
    const std::vector<minilang::Mutant>& mutants,
    const std::vector<std::string>& tests,
    const std::map<std::string, TestStatus>& baseline,
    const KillMatrixOptions& options) {
  // Rebuild the mutated programs; ids are stable for a given program and
  // operator set, so the wanted subset is picked out by id.
  std::map<std::string, minilang::Program> programs;
  for (auto& [mutant, mutated] : minilang::mutate(program, options.operators))
    programs.emplace(mutant.id, std::move(mutated));

  std::vector<KillRecord> records(mutants.size());
  auto run_one = [&](std::size_t index) {
    const minilang::Mutant& mutant = mutants[index];
    auto it = programs.find(mutant.id);
    if (it == programs.end())
      raise(ErrorCode::FormatError,
            "mutant \"" + mutant.id + "\" does not exist for this program");
    const minilang::ProgramModel model =
        minilang::analyze(minilang::clone(it->second));

    KillRecord record;
    record.mutant_id = mutant.id;
    minilang::ExecOptions exec;
    exec.step_budget = options.step_budget;
    for (const auto& test : tests) {
      const auto outcome = minilang::execute_test(model, test, exec).outcome;
      record.changes.emplace_back(
          test, classify_change(baseline.at(test), outcome.status));
    }
    records[index] = std::move(record);
  };

  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < mutants.size(); ++i) run_one(i);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const int n = std::min<int>(options.jobs, static_cast<int>(mutants.size()));
  for (int w = 0; w < n; ++w) {
    workers.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < mutants.size();
           i = next.fetch_add(1))
        run_one(i);
    });
  }
  for (auto& worker : workers) worker.join();
  return records;
}

namespace {

std::map<std::string, Entity> location_by_id(
    const std::vector<minilang::Mutant>& mutants) {
  std::map<std::string, Entity> out;
  for (const auto& mutant : mutants) out.emplace(mutant.id, mutant.location);
  return out;
}

const Entity& location_of(const std::map<std::string, Entity>& locations,
                          const std::string& mutant_id) {
  auto it = locations.find(mutant_id);
  if (it == locations.end())
    raise(ErrorCode::FormatError,
          "kill record for unknown mutant \"" + mutant_id + "\"");
  return it->second;
}

}  // namespace

std::map<Entity, double> metallaxis(const std::vector<KillRecord>& kills,
                                    const std::vector<minilang::Mutant>& mutants,
                                    int total_failing, int total_passing) {
  (void)total_passing;
  const auto locations = location_by_id(mutants);
  std::map<Entity, double> scores;
  for (const auto& record : kills) {
    const int fk = record.f_kill();
    const int pk = record.p_kill();
    const double score =
        fk == 0 ? 0.0
                : fk / std::sqrt(static_cast<double>(total_failing) *
                                 (fk + pk));
    auto& slot = scores[location_of(locations, record.mutant_id)];
    slot = std::max(slot, score);
  }
  return scores;
}

std::map<Entity, double> muse(const std::vector<KillRecord>& kills,
                              const std::vector<minilang::Mutant>& mutants,
                              int total_failing, int total_passing) {
  const auto locations = location_by_id(mutants);
  long long f2p_total = 0;
  long long p2f_total = 0;
  for (const auto& record : kills) {
    f2p_total += record.f2p();
    p2f_total += record.p2f();
  }
  const double alpha =
      (p2f_total == 0 || total_passing == 0)
          ? 0.0
          : (static_cast<double>(f2p_total) / total_failing) *
                (static_cast<double>(total_passing) / p2f_total);

  std::map<Entity, std::pair<double, int>> sums;  // sum, mutant count
  for (const auto& record : kills) {
    const double fail_term =
        static_cast<double>(record.f2p()) / total_failing;
    const double pass_term =
        total_passing == 0
            ? 0.0
            : static_cast<double>(record.p2f()) / total_passing;
    auto& slot = sums[location_of(locations, record.mutant_id)];
    slot.first += fail_term - alpha * pass_term;
    slot.second += 1;
  }
  std::map<Entity, double> scores;
  for (const auto& [entity, sum] : sums)
    scores[entity] = sum.first / sum.second;
  return scores;
}

}  // namespace locus
