#include "locus/sbfl.hpp"

#include <cmath>
#include <limits>

namespace locus {

namespace {

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

double tarantula(const TallyCounts& t) {
  if (t.ef == 0) return 0.0;
  const int failing = t.total_failing();
  const int passing = t.total_passing();
  const double fail_ratio = static_cast<double>(t.ef) / failing;
  const double pass_ratio =
      passing == 0 ? 0.0 : static_cast<double>(t.ep) / passing;
  return fail_ratio / (fail_ratio + pass_ratio);
}

double ochiai(const TallyCounts& t) {
  if (t.ef == 0) return 0.0;
  const int failing = t.total_failing();
  return t.ef / std::sqrt(static_cast<double>(failing) * (t.ef + t.ep));
}

double dstar(const TallyCounts& t, int star) {
  if (t.ef == 0) return 0.0;
  const int denominator = t.ep + t.nf;
  if (denominator == 0) return std::numeric_limits<double>::infinity();
  return int_pow(static_cast<double>(t.ef), star) / denominator;
}

SbflScores sbfl_scores(const SpectrumMatrix& matrix, int star) {
  SbflScores scores;
  for (const auto& [entity, counts] : tally(matrix)) {
    scores.tarantula[entity] = tarantula(counts);
    scores.ochiai[entity] = ochiai(counts);
    scores.dstar[entity] = dstar(counts, star);
  }
  return scores;
}

SbflRankings sbfl_localize(const SpectrumMatrix& matrix, int star) {
  const SbflScores scores = sbfl_scores(matrix, star);
  return {rank(scores.tarantula), rank(scores.ochiai), rank(scores.dstar)};
}

}  // namespace locus
