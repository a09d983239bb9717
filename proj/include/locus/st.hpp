#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "locus/entity.hpp"
#include "locus/outcome.hpp"
#include "locus/ranking.hpp"

namespace locus {

// The program shape ST needs: where each function lives and which lines it
// owns. Decoupled from the mini-language model so externally produced
// traces can be scored too.
struct StFunction {
  std::string name;  // qualified
  std::string file;
  int start_line = 0;
  int end_line = 0;
  std::vector<int> lines;  // statement lines owned by the function
};

// A frame at 0-based depth d contributes 1/(d+1) to its function; a function
// scores its max contribution over all traces. Frames naming `test_*`
// functions are skipped; any other frame must name a known function
// (UnknownFunction otherwise). Every line of a scoring function inherits the
// function score, so two statements of one function never score apart.
std::map<Entity, double> st_statement_scores(
    const std::vector<std::pair<std::string, StackTrace>>& crashing,
    const std::vector<StFunction>& functions);

// Statement-granularity ranking; empty input yields an empty ranking.
Ranking st_localize(
    const std::vector<std::pair<std::string, StackTrace>>& crashing,
    const std::vector<StFunction>& functions);

}  // namespace locus
