#pragma once

#include <map>
#include <string>
#include <vector>

#include "locus/entity.hpp"
#include "locus/outcome.hpp"

namespace locus {

// Per-test record: outcome plus the statement entities the test covered.
struct ExecutionRecord {
  std::string test_id;
  TestOutcome outcome;
  std::vector<Entity> covered;  // statement entities, sorted, unique
};

// The whole spectrum: one record per test, test ids unique.
class SpectrumMatrix {
 public:
  SpectrumMatrix() = default;

  // Throws DuplicateTest when the id is already present.
  void add(ExecutionRecord record);

  const std::vector<ExecutionRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  int failing_count() const;
  int passing_count() const;

 private:
  std::vector<ExecutionRecord> records_;
};

// The (ef, ep, nf, np) quadruple behind every SBFL formula.
struct TallyCounts {
  int ef = 0;  // failing tests covering the entity
  int ep = 0;  // passing tests covering the entity
  int nf = 0;  // failing tests not covering it
  int np = 0;  // passing tests not covering it

  int total_failing() const { return ef + nf; }
  int total_passing() const { return ep + np; }

  friend bool operator==(const TallyCounts& a, const TallyCounts& b) {
    return a.ef == b.ef && a.ep == b.ep && a.nf == b.nf && a.np == b.np;
  }
};

// Tally every entity covered by at least one test. Throws NoFailingTests
// when the matrix has no failing test (localization is undefined then).
std::map<Entity, TallyCounts> tally(const SpectrumMatrix& matrix);

}  // namespace locus
