#pragma once

#include <map>

#include "locus/ranking.hpp"
#include "locus/spectrum.hpp"

namespace locus {

// Suspiciousness formulas. All three treat ef = 0 as score 0, and tolerate
// the degenerate P = 0 matrix (Tarantula's ep/P term reads as 0 then).
// DStar returns +infinity when ef > 0 and ep + nf = 0.
double tarantula(const TallyCounts& t);
double ochiai(const TallyCounts& t);
double dstar(const TallyCounts& t, int star = 2);

struct SbflScores {
  std::map<Entity, double> tarantula;
  std::map<Entity, double> ochiai;
  std::map<Entity, double> dstar;
};

struct SbflRankings {
  Ranking tarantula;
  Ranking ochiai;
  Ranking dstar;
};

// One tally pass scores all three techniques over exactly the entities
// covered by at least one test. Propagates NoFailingTests.
SbflScores sbfl_scores(const SpectrumMatrix& matrix, int star = 2);
SbflRankings sbfl_localize(const SpectrumMatrix& matrix, int star = 2);

}  // namespace locus
