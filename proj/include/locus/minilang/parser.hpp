#pragma once

#include <string_view>

#include "locus/minilang/ast.hpp"

namespace locus::minilang {

// Parses one source file into its function declarations. Line attribution is
// exact: every statement and expression node carries the line of its first
// token. Throws ParseFailure with file:line:col context.
SourceFile parse(std::string_view source, const std::string& file);

}  // namespace locus::minilang
