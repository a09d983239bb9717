#pragma once

#include <set>
#include <string>
#include <vector>

#include "locus/entity.hpp"
#include "locus/minilang/ast.hpp"

namespace locus::minilang {

// Mutation operator families:
//   AOR  — arithmetic operator replacement, {+,-,*,/} pairwise
//   ROR  — relational operator replacement, {==,!=,<,<=,>,>=} pairwise
//   LCR  — logical connector replacement, and <-> or
//   LIT  — numeric literal nudging, value-1 and value+1
enum class MutOperator { AOR, ROR, LCR, LIT };

const char* mut_operator_name(MutOperator op);
MutOperator mut_operator_from_name(const std::string& name);

inline std::set<MutOperator> default_mut_operators() {
  return {MutOperator::AOR, MutOperator::ROR, MutOperator::LCR,
          MutOperator::LIT};
}

struct Mutant {
  std::string id;        // "m1", "m2", ... in enumeration order
  locus::Entity location;  // statement entity of the mutated node
  std::string op_tag;    // AOR / ROR / LCR / LIT
  std::string description;  // "c + term -> c * term"
};

// Enumerates every single-node mutant of the program, in AST preorder then
// operator table order. Each returned Program differs from the input at
// exactly one expression node.
std::vector<std::pair<Mutant, Program>> mutate(
    const Program& program,
    const std::set<MutOperator>& operators = default_mut_operators());

}  // namespace locus::minilang
