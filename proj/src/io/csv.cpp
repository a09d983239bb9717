#include "locus/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "locus/errors.hpp"

namespace locus::io {

std::string format_score(double score) {
  if (std::isinf(score)) return score > 0 ? "inf" : "-inf";
  if (score == 0.0) score = 0.0;  // fold -0 into +0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", score);
  return buf;
}

std::string ranking_to_csv(const Ranking& ranking) {
  std::string out = "rank,entity,score\n";
  for (const auto& entry : ranking.entries) {
    out += std::to_string(entry.rank);
    out += ",";
    out += entry.entity.render();
    out += ",";
    out += format_score(entry.score);
    out += "\n";
  }
  return out;
}

void write_ranking_csv(const Ranking& ranking, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot open " + path + " for write");
  const std::string text = ranking_to_csv(ranking);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) raise(ErrorCode::IoFailure, "write to " + path + " failed");
}

}  // namespace locus::io
