#pragma once

#include <map>
#include <vector>

#include "locus/entity.hpp"

namespace locus {

enum class Granularity { Statement, Function };

const char* granularity_name(Granularity granularity);
Granularity granularity_from_name(const std::string& name);

// Collapse statement scores to function scores: each statement belongs to the
// innermost function whose span contains its line, and a function scores the
// max over its statements (0 when none of its statements is scored).
//
// Nested spans resolve innermost-first; two spans that overlap without one
// strictly containing the other raise OverlappingSpans.
std::map<Entity, double> to_function_granularity(
    const std::map<Entity, double>& stmt_scores,
    const std::vector<Entity>& functions);

}  // namespace locus
