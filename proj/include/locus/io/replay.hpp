#pragma once

#include <string>

#include "locus/ranking.hpp"
#include "locus/technique.hpp"

namespace locus::io {

// Rebuilds a technique's ranking purely from a run store's stage files; the
// result serializes byte-equal to the CSV the original run wrote. Throws
// MissingStage when a required stage is absent.
Ranking replay(const std::string& store_dir, Technique technique);

}  // namespace locus::io
