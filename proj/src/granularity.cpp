#include "locus/granularity.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "locus/errors.hpp"

namespace locus {

namespace {

bool contains(const Entity& fn, const Entity& other) {
  return fn.line <= other.line && other.end_line <= fn.end_line;
}

bool overlaps(const Entity& a, const Entity& b) {
  return a.line <= b.end_line && b.line <= a.end_line;
}

}  // namespace

std::map<Entity, double> to_function_granularity(
    const std::map<Entity, double>& stmt_scores,
    const std::vector<Entity>& functions) {
  // Reject ambiguous layouts: overlapping spans in one file are only allowed
  // when one function strictly contains the other (nesting).
  for (std::size_t i = 0; i < functions.size(); ++i) {
    for (std::size_t j = i + 1; j < functions.size(); ++j) {
      const Entity& a = functions[i];
      const Entity& b = functions[j];
      if (a.file != b.file || !overlaps(a, b)) continue;
      const bool nested = (contains(a, b) && !contains(b, a)) ||
                          (contains(b, a) && !contains(a, b));
      if (!nested)
        raise(ErrorCode::OverlappingSpans,
              "functions " + a.render() + " and " + b.render() +
                  " claim the same lines");
    }
  }

  std::map<Entity, double> result;
  for (const Entity& fn : functions) result[fn] = 0.0;

  for (const auto& [stmt, score] : stmt_scores) {
    const Entity* owner = nullptr;
    for (const Entity& fn : functions) {
      if (fn.file != stmt.file) continue;
      if (fn.line > stmt.line || stmt.line > fn.end_line) continue;
      // Innermost span wins for nested functions.
      if (owner == nullptr || contains(*owner, fn)) owner = &fn;
    }
    if (owner == nullptr) continue;  // statement outside every span
    auto& slot = result[*owner];
    slot = std::max(slot, score);
  }
  return result;
}

}  // namespace locus
