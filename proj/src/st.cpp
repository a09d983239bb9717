#include "locus/st.hpp"

#include <algorithm>

#include "locus/errors.hpp"

namespace locus {

namespace {

bool is_test_frame(const std::string& function_name) {
  return function_name.rfind("test_", 0) == 0;
}

}  // namespace

std::map<Entity, double> st_statement_scores(
    const std::vector<std::pair<std::string, StackTrace>>& crashing,
    const std::vector<StFunction>& functions) {
  std::map<std::string, const StFunction*> by_name;
  for (const auto& fn : functions) by_name[fn.name] = &fn;

  std::map<std::string, double> function_scores;
  for (const auto& [test_id, trace] : crashing) {
    int depth = 0;
    for (const auto& frame : trace.frames) {
      if (is_test_frame(frame.function)) continue;
      auto it = by_name.find(frame.function);
      if (it == by_name.end() || it->second->file != frame.file)
        raise(ErrorCode::UnknownFunction,
              "stack frame names unknown function \"" + frame.function +
                  "\" in " + frame.file + " (test " + test_id + ")");
      auto& slot = function_scores[frame.function];
      slot = std::max(slot, 1.0 / (depth + 1));
      ++depth;
    }
  }

  std::map<Entity, double> scores;
  for (const auto& [name, score] : function_scores) {
    const StFunction& fn = *by_name.at(name);
    for (int line : fn.lines)
      scores[Entity::statement(fn.file, line)] = score;
  }
  return scores;
}

Ranking st_localize(
    const std::vector<std::pair<std::string, StackTrace>>& crashing,
    const std::vector<StFunction>& functions) {
  return rank(st_statement_scores(crashing, functions));
}

}  // namespace locus
