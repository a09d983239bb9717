#pragma once

#include <string>

#include "locus/minilang/ast.hpp"

namespace locus::minilang {

// Renders a single expression on one line, e.g. "c + term".
std::string print_expr(const Expr& expr);

// Renders a source file such that every node lands back on its recorded
// line: parse(print(f)) is structurally equal to f, lines included.
std::string print_source(const SourceFile& file);

}  // namespace locus::minilang
