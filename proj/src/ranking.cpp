#include "locus/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "locus/errors.hpp"

namespace locus {

std::vector<Entity> Ranking::top_rank_set() const {
  std::vector<Entity> top;
  for (const auto& entry : entries) {
    if (entry.rank != 1) break;
    top.push_back(entry.entity);
  }
  return top;
}

Ranking rank(const std::map<Entity, double>& scores) {
  Ranking ranking;
  ranking.entries.reserve(scores.size());
  for (const auto& [entity, score] : scores) {
    if (std::isnan(score))
      raise(ErrorCode::FormatError,
            "NaN score for entity " + entity.render());
    ranking.entries.push_back({entity, score, 0});
  }
  // Map iteration is already (file, line, name)-ordered, so a stable sort on
  // descending score keeps ties in deterministic serialization order.
  std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     return a.score > b.score;
                   });
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    if (i > 0 && ranking.entries[i].score == ranking.entries[i - 1].score)
      ranking.entries[i].rank = ranking.entries[i - 1].rank;
    else
      ranking.entries[i].rank = static_cast<int>(i) + 1;
  }
  return ranking;
}

}  // namespace locus
