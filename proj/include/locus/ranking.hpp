#pragma once

#include <map>
#include <vector>

#include "locus/entity.hpp"

namespace locus {

struct RankedEntry {
  Entity entity;
  double score = 0.0;
  int rank = 0;  // standard-competition: "1,1,3"

  friend bool operator==(const RankedEntry& a, const RankedEntry& b) {
    return a.entity == b.entity && a.score == b.score && a.rank == b.rank;
  }
};

// Scores non-increasing along entries; equal score <=> equal rank; ties
// ordered by (file, line, name) so serialization is deterministic.
struct Ranking {
  std::vector<RankedEntry> entries;

  bool empty() const { return entries.empty(); }

  // Entities sharing rank 1 (empty for an empty ranking).
  std::vector<Entity> top_rank_set() const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.entries == b.entries;
  }
};

// Build a ranking from a score map. Scores may include +infinity (sorts
// above every finite value); NaN is rejected.
Ranking rank(const std::map<Entity, double>& scores);

}  // namespace locus
