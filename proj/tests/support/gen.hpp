#pragma once

#include <optional>
#include <string>
#include <vector>

namespace locus::testgen {

// One dynamic predicate instance observed by the reference evaluator.
struct GInstance {
  int line = 0;
  int index = 0;  // per-line occurrence
  bool observed = false;
};

struct GeneratedTest {
  std::string name;
  bool expect_failing = false;
  bool expect_fixable = false;  // some single flip makes it pass
};

// A deterministic random program: one target function `f` with branches and
// bounded loops over integer arithmetic, plus call-and-assert tests. The
// generator carries its own tiny evaluator, so expected values come from an
// implementation independent of the production interpreter.
struct GeneratedProgram {
  std::string source;  // single .ml1 file
  std::vector<GeneratedTest> tests;
  int max_instances = 0;  // predicate instances in any single test run
};

GeneratedProgram gen_ps_program(unsigned seed);

// Syntax-heavy source (floats, bools, logic operators, approx asserts,
// nested functions) for parser/printer round-trip checks. Parseable, not
// necessarily meaningful to run.
std::string gen_rich_source(unsigned seed);

}  // namespace locus::testgen
