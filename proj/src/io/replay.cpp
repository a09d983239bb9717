#include "locus/io/replay.hpp"

#include <map>

#include "locus/errors.hpp"
#include "locus/io/run_store.hpp"
#include "locus/io/stages.hpp"
#include "locus/mbfl.hpp"
#include "locus/pipeline.hpp"
#include "locus/ps.hpp"
#include "locus/sbfl.hpp"
#include "locus/st.hpp"

namespace locus::io {

namespace {

std::vector<Entity> function_entities(const std::vector<StFunction>& functions) {
  std::vector<Entity> out;
  out.reserve(functions.size());
  for (const auto& fn : functions)
    out.push_back(
        Entity::function(fn.file, fn.name, fn.start_line, fn.end_line));
  return out;
}

}  // namespace

Ranking replay(const std::string& store_dir, Technique technique) {
  const RunStore store = RunStore::open(store_dir);
  const RunConfig config = store.read_config();

  std::map<Entity, double> stmt_scores;
  switch (technique_family(technique)) {
    case Family::Sbfl: {
      const SpectrumMatrix matrix = designate_failing(
          spectrum_from_jsonl(store.read_stage("tests.jsonl")),
          config.failing_list);
      const SbflScores scores = sbfl_scores(matrix, config.dstar_exponent);
      if (technique == Technique::Tarantula)
        stmt_scores = scores.tarantula;
      else if (technique == Technique::Ochiai)
        stmt_scores = scores.ochiai;
      else
        stmt_scores = scores.dstar;
      break;
    }
    case Family::Mbfl: {
      const SpectrumMatrix matrix = designate_failing(
          spectrum_from_jsonl(store.read_stage("tests.jsonl")),
          config.failing_list);
      const auto mutants = mutants_from_jsonl(store.read_stage("mutants.jsonl"));
      const auto kills = kills_from_jsonl(store.read_stage("kills.jsonl"));
      stmt_scores =
          technique == Technique::Metallaxis
              ? metallaxis(kills, mutants, matrix.failing_count(),
                           matrix.passing_count())
              : muse(kills, mutants, matrix.failing_count(),
                     matrix.passing_count());
      break;
    }
    case Family::Ps: {
      stmt_scores = ps_scores_from_flips(
          ps_flips_from_jsonl(store.read_stage("ps_flips.jsonl")));
      break;
    }
    case Family::St: {
      const auto traces = traces_from_jsonl(store.read_stage("traces.jsonl"));
      const auto functions =
          functions_from_jsonl(store.read_stage("functions.jsonl"));
      stmt_scores = st_statement_scores(traces, functions);
      break;
    }
  }

  std::vector<Entity> fn_entities;
  if (config.granularity == Granularity::Function)
    fn_entities = function_entities(
        functions_from_jsonl(store.read_stage("functions.jsonl")));
  return finalize_ranking(stmt_scores, config.granularity, fn_entities);
}

}  // namespace locus::io
