#pragma once

#include <string>
#include <vector>

#include "locus/entity.hpp"
#include "locus/minilang/ast.hpp"

namespace locus::minilang {

// Static facts about one function, gathered after parsing.
struct FunctionInfo {
  std::string qualified_name;  // "outer.inner" for nested functions
  std::string file;
  int decl_line = 0;
  int end_line = 0;  // max line of any node in the body, nested included
  bool is_test = false;
  std::vector<std::string> params;
  std::vector<int> own_lines;  // code lines owned by this function (innermost)
  const FunctionDecl* decl = nullptr;
  int parent = -1;  // index of lexically enclosing function, -1 at top level

  locus::Entity entity() const {
    return locus::Entity::function(file, qualified_name, decl_line, end_line);
  }
};

// A parsed project plus its resolved function index. The index order is
// deterministic: files in load order, declarations in source order,
// nested functions right after their parent. FunctionInfo::decl points into
// `program`, so the model is move-only.
struct ProgramModel {
  Program program;
  std::vector<FunctionInfo> functions;

  ProgramModel() = default;
  ProgramModel(const ProgramModel&) = delete;
  ProgramModel& operator=(const ProgramModel&) = delete;
  ProgramModel(ProgramModel&&) = default;
  ProgramModel& operator=(ProgramModel&&) = default;

  const FunctionInfo* find_function(const std::string& qualified_name) const;
  const FunctionInfo* info_for(const FunctionDecl* decl) const;
  // Innermost function owning (file, line), or nullptr.
  const FunctionInfo* owner_of(const std::string& file, int line) const;
  bool is_test_line(const std::string& file, int line) const;

  // Sorted ids of top-level zero-argument `test_*` functions.
  std::vector<std::string> test_ids() const;
  // Function entities for every non-test function.
  std::vector<locus::Entity> target_function_entities() const;
};

// Builds the index and statically resolves names: duplicate top-level
// functions, unknown callees, wrong arities, unknown variables, and writes
// to enclosing-function parameters are all rejected here.
ProgramModel analyze(Program program);

// Parses `sources` (path -> text, in order) and analyzes the result.
struct SourceText {
  std::string path;
  std::string text;
};
ProgramModel load_sources(const std::vector<SourceText>& sources);

// Loads every `.ml1` file in a directory (sorted by name) or an explicit
// file list; paths inside the model are relative to `root`.
ProgramModel load_project_dir(const std::string& root);
ProgramModel load_project_files(const std::vector<std::string>& paths);

}  // namespace locus::minilang
