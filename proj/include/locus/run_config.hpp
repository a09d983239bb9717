#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locus/granularity.hpp"
#include "locus/technique.hpp"

namespace locus {

struct RunConfig {
  std::string src;  // project directory (informational inside a run store)
  Family family = Family::Sbfl;
  Granularity granularity = Granularity::Statement;
  std::vector<std::string> failing_list;  // empty -> run everything
  std::string output_dir;                 // run store location
  int dstar_exponent = 2;
  int ps_budget = 10'000;  // max flips per failing test
  std::uint64_t step_budget = 1'000'000;
  int jobs = 1;
};

}  // namespace locus
