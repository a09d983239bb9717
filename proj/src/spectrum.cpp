#include "locus/spectrum.hpp"

#include <algorithm>
#include <set>

#include "locus/errors.hpp"

namespace locus {

void SpectrumMatrix::add(ExecutionRecord record) {
  for (const auto& existing : records_) {
    if (existing.test_id == record.test_id)
      raise(ErrorCode::DuplicateTest,
            "duplicate test id \"" + record.test_id + "\"");
  }
  std::sort(record.covered.begin(), record.covered.end());
  record.covered.erase(
      std::unique(record.covered.begin(), record.covered.end()),
      record.covered.end());
  records_.push_back(std::move(record));
}

int SpectrumMatrix::failing_count() const {
  int n = 0;
  for (const auto& r : records_)
    if (r.outcome.is_failing()) ++n;
  return n;
}

int SpectrumMatrix::passing_count() const {
  return static_cast<int>(records_.size()) - failing_count();
}

std::map<Entity, TallyCounts> tally(const SpectrumMatrix& matrix) {
  const int failing = matrix.failing_count();
  const int passing = matrix.passing_count();
  if (failing == 0)
    raise(ErrorCode::NoFailingTests,
          "fault localization needs at least one failing test");

  std::map<Entity, TallyCounts> tallies;
  for (const auto& record : matrix.records()) {
    for (const auto& entity : record.covered) {
      auto& t = tallies[entity];
      if (record.outcome.is_failing())
        ++t.ef;
      else
        ++t.ep;
    }
  }
  for (auto& [entity, t] : tallies) {
    t.nf = failing - t.ef;
    t.np = passing - t.ep;
  }
  return tallies;
}

}  // namespace locus
