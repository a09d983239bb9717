#pragma once

#include <string>

#include "locus/ranking.hpp"

namespace locus::io {

// Header `rank,entity,score`; entities as `file:line` or
// `file:name:start-end`; scores with 6 decimal digits, `inf` for +infinity.
// Byte-identical across runs on identical rankings.
std::string ranking_to_csv(const Ranking& ranking);

// Writes UTF-8 with LF line endings. Throws IoFailure.
void write_ranking_csv(const Ranking& ranking, const std::string& path);

std::string format_score(double score);

}  // namespace locus::io
