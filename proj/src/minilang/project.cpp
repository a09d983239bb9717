#include "locus/minilang/project.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "locus/errors.hpp"
#include "locus/minilang/parser.hpp"

namespace fs = std::filesystem;

namespace locus::minilang {

namespace {

[[noreturn]] void resolve_fail(const std::string& file, int line,
                               const std::string& message) {
  raise(ErrorCode::ParseFailure,
        file + ":" + std::to_string(line) + ": " + message);
}

// Collects every line carrying a node of this function (nested functions
// excluded) and the body-wide line extent (nested functions included).
struct LineScan {
  std::set<int> own;
  int max_line = 0;

  void expr(const Expr& e) {
    own.insert(e.line);
    max_line = std::max(max_line, e.line);
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, UnaryExpr>) {
            expr(*node.operand);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            expr(*node.lhs);
            expr(*node.rhs);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            for (const auto& arg : node.args) expr(*arg);
          }
        },
        e.node);
  }

  void nested_extent(const FunctionDecl& fn) {
    max_line = std::max(max_line, fn.line);
    for (const auto& stmt : fn.body) nested_stmt(stmt);
  }

  void nested_stmt(const Stmt& s) {
    max_line = std::max(max_line, s.line);
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, IfStmt>) {
            for (const auto& inner : node.then_body) nested_stmt(inner);
            for (const auto& inner : node.else_body) nested_stmt(inner);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            for (const auto& inner : node.body) nested_stmt(inner);
          } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
            nested_extent(*node.fn);
          }
        },
        s.node);
  }

  void stmt(const Stmt& s) {
    if (std::holds_alternative<FnDeclStmt>(s.node)) {
      // The declaration line and body belong to the nested function.
      nested_extent(*std::get<FnDeclStmt>(s.node).fn);
      return;
    }
    own.insert(s.line);
    max_line = std::max(max_line, s.line);
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            expr(*node.init);
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            expr(*node.value);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            expr(*node.cond);
            for (const auto& inner : node.then_body) stmt(inner);
            for (const auto& inner : node.else_body) stmt(inner);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            expr(*node.cond);
            for (const auto& inner : node.body) stmt(inner);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (node.value) expr(*node.value);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            expr(*node.expr);
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            expr(*node.cond);
          } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
            expr(*node.lhs);
            expr(*node.rhs);
            if (node.tol) expr(*node.tol);
          }
        },
        s.node);
  }
};

// Name resolution context for one function body.
struct Scope {
  const FunctionDecl* fn = nullptr;
  std::set<std::string> locals;      // params + every let name in the body
  std::set<std::string> nested_fns;  // functions declared in this body
  const Scope* parent = nullptr;
};

class Analyzer {
 public:
  explicit Analyzer(ProgramModel& model) : model_(model) {}

  void run() {
    // Index every function first so calls can resolve forward and across
    // files.
    for (auto& file : model_.program.files)
      for (auto& fn : file.functions) index_function(fn, file.path, "", -1);

    for (const auto& info : model_.functions) {
      if (info.parent != -1) continue;
      Scope scope = make_scope(*info.decl, nullptr);
      resolve_body(info.decl->body, scope, info.file);
    }
  }

 private:
  void index_function(const FunctionDecl& fn, const std::string& file,
                      const std::string& prefix, int parent) {
    const std::string qualified =
        prefix.empty() ? fn.name : prefix + "." + fn.name;
    if (is_builtin(fn.name))
      resolve_fail(file, fn.line,
                   "\"" + fn.name + "\" is a reserved builtin name");
    if (fn.name == "approx")
      resolve_fail(file, fn.line, "\"approx\" is reserved");

    for (const auto& other : model_.functions) {
      if (other.qualified_name != qualified) continue;
      if (parent == -1 && fn.name.rfind("test_", 0) == 0)
        raise(ErrorCode::DuplicateTest,
              file + ":" + std::to_string(fn.line) + ": duplicate test \"" +
                  fn.name + "\"");
      resolve_fail(file, fn.line, "duplicate function \"" + qualified + "\"");
    }

    LineScan scan;
    scan.own.insert(fn.line);
    scan.max_line = fn.line;
    for (const auto& stmt : fn.body) scan.stmt(stmt);

    FunctionInfo info;
    info.qualified_name = qualified;
    info.file = file;
    info.decl_line = fn.line;
    info.end_line = scan.max_line;
    const std::string& top = parent == -1
                                 ? fn.name
                                 : model_.functions[parent].qualified_name;
    info.is_test = top.rfind("test_", 0) == 0;
    info.params = fn.params;
    info.own_lines.assign(scan.own.begin(), scan.own.end());
    info.decl = &fn;
    info.parent = parent;
    model_.functions.push_back(std::move(info));
    const int self = static_cast<int>(model_.functions.size()) - 1;

    for (const auto& stmt : fn.body)
      if (std::holds_alternative<FnDeclStmt>(stmt.node))
        index_function(*std::get<FnDeclStmt>(stmt.node).fn, file, qualified,
                       self);
  }

  Scope make_scope(const FunctionDecl& fn, const Scope* parent) {
    Scope scope;
    scope.fn = &fn;
    scope.parent = parent;
    for (const auto& p : fn.params) scope.locals.insert(p);
    collect_lets(fn.body, scope);
    return scope;
  }

  // Flow-insensitive: a let anywhere in the body (branches included, nested
  // functions excluded) introduces the name for the whole body.
  void collect_lets(const std::vector<Stmt>& body, Scope& scope) {
    for (const auto& stmt : body) {
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, LetStmt>) {
              scope.locals.insert(node.name);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              collect_lets(node.then_body, scope);
              collect_lets(node.else_body, scope);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
              collect_lets(node.body, scope);
            } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
              scope.nested_fns.insert(node.fn->name);
            }
          },
          stmt.node);
    }
  }

  void resolve_body(const std::vector<Stmt>& body, const Scope& scope,
                    const std::string& file) {
    for (const auto& stmt : body) {
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, LetStmt>) {
              resolve_expr(*node.init, scope, file);
            } else if constexpr (std::is_same_v<T, AssignStmt>) {
              if (!scope.locals.count(node.name)) {
                if (visible_variable(scope, node.name))
                  resolve_fail(file, stmt.line,
                               "cannot assign to enclosing-function "
                               "parameter \"" +
                                   node.name + "\"");
                resolve_fail(file, stmt.line,
                             "unknown variable \"" + node.name + "\"");
              }
              resolve_expr(*node.value, scope, file);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              resolve_expr(*node.cond, scope, file);
              resolve_body(node.then_body, scope, file);
              resolve_body(node.else_body, scope, file);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
              resolve_expr(*node.cond, scope, file);
              resolve_body(node.body, scope, file);
            } else if constexpr (std::is_same_v<T, ReturnStmt>) {
              if (node.value) resolve_expr(*node.value, scope, file);
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
              resolve_expr(*node.expr, scope, file);
            } else if constexpr (std::is_same_v<T, AssertStmt>) {
              resolve_expr(*node.cond, scope, file);
            } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
              resolve_expr(*node.lhs, scope, file);
              resolve_expr(*node.rhs, scope, file);
              if (node.tol) resolve_expr(*node.tol, scope, file);
            } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
              Scope inner = make_scope(*node.fn, &scope);
              resolve_body(node.fn->body, inner, file);
            }
          },
          stmt.node);
    }
  }

  // Enclosing-function parameters are readable; enclosing lets are not.
  bool visible_variable(const Scope& scope, const std::string& name) const {
    if (scope.locals.count(name)) return true;
    for (const Scope* s = scope.parent; s; s = s->parent)
      for (const auto& p : s->fn->params)
        if (p == name) return true;
    return false;
  }

  bool visible_function(const Scope& scope, const std::string& name) const {
    for (const Scope* s = &scope; s; s = s->parent)
      if (s->nested_fns.count(name)) return true;
    for (const auto& info : model_.functions)
      if (info.parent == -1 && info.qualified_name == name) return true;
    return false;
  }

  std::size_t function_arity(const Scope& scope,
                             const std::string& name) const {
    for (const Scope* s = &scope; s; s = s->parent) {
      if (!s->nested_fns.count(name)) continue;
      for (const auto& stmt : s->fn->body)
        if (std::holds_alternative<FnDeclStmt>(stmt.node) &&
            std::get<FnDeclStmt>(stmt.node).fn->name == name)
          return std::get<FnDeclStmt>(stmt.node).fn->params.size();
    }
    for (const auto& info : model_.functions)
      if (info.parent == -1 && info.qualified_name == name)
        return info.params.size();
    return 0;
  }

  void resolve_expr(const Expr& expr, const Scope& scope,
                    const std::string& file) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            if (!visible_variable(scope, node.name))
              resolve_fail(file, expr.line,
                           "unknown variable \"" + node.name + "\"");
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            resolve_expr(*node.operand, scope, file);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            resolve_expr(*node.lhs, scope, file);
            resolve_expr(*node.rhs, scope, file);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            if (is_builtin(node.callee)) {
              if (node.args.size() !=
                  static_cast<std::size_t>(builtin_arity(node.callee)))
                resolve_fail(file, expr.line,
                             "builtin \"" + node.callee + "\" takes " +
                                 std::to_string(builtin_arity(node.callee)) +
                                 " argument(s)");
            } else if (!visible_function(scope, node.callee)) {
              resolve_fail(file, expr.line,
                           "call to undefined function \"" + node.callee +
                               "\"");
            } else if (function_arity(scope, node.callee) !=
                       node.args.size()) {
              resolve_fail(file, expr.line,
                           "wrong number of arguments to \"" + node.callee +
                               "\"");
            }
            for (const auto& arg : node.args) resolve_expr(*arg, scope, file);
          }
        },
        expr.node);
  }

  ProgramModel& model_;
};

}  // namespace

const FunctionInfo* ProgramModel::find_function(
    const std::string& qualified_name) const {
  for (const auto& info : functions)
    if (info.qualified_name == qualified_name) return &info;
  return nullptr;
}

const FunctionInfo* ProgramModel::info_for(const FunctionDecl* decl) const {
  for (const auto& info : functions)
    if (info.decl == decl) return &info;
  return nullptr;
}

const FunctionInfo* ProgramModel::owner_of(const std::string& file,
                                           int line) const {
  const FunctionInfo* best = nullptr;
  for (const auto& info : functions) {
    if (info.file != file) continue;
    if (line < info.decl_line || line > info.end_line) continue;
    if (best == nullptr ||
        (info.end_line - info.decl_line) < (best->end_line - best->decl_line))
      best = &info;
  }
  return best;
}

bool ProgramModel::is_test_line(const std::string& file, int line) const {
  const FunctionInfo* owner = owner_of(file, line);
  return owner != nullptr && owner->is_test;
}

std::vector<std::string> ProgramModel::test_ids() const {
  std::vector<std::string> ids;
  for (const auto& info : functions)
    if (info.parent == -1 && info.is_test && info.params.empty())
      ids.push_back(info.qualified_name);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<locus::Entity> ProgramModel::target_function_entities() const {
  std::vector<locus::Entity> out;
  for (const auto& info : functions)
    if (!info.is_test) out.push_back(info.entity());
  return out;
}

ProgramModel analyze(Program program) {
  ProgramModel model;
  model.program = std::move(program);
  Analyzer(model).run();
  return model;
}

ProgramModel load_sources(const std::vector<SourceText>& sources) {
  Program program;
  for (const auto& source : sources)
    program.files.push_back(parse(source.text, source.path));
  return analyze(std::move(program));
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(ErrorCode::IoFailure, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ProgramModel load_project_dir(const std::string& root) {
  if (!fs::is_directory(root))
    raise(ErrorCode::IoFailure, "not a directory: " + root);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".ml1")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  std::vector<SourceText> sources;
  for (const auto& path : paths)
    sources.push_back({fs::relative(path, root).generic_string(),
                       read_file(path)});
  return load_sources(sources);
}

ProgramModel load_project_files(const std::vector<std::string>& paths) {
  if (paths.empty()) raise(ErrorCode::IoFailure, "no source files given");
  // Entity paths stay portable: relative to the files' common parent.
  fs::path parent = fs::path(paths.front()).parent_path();
  std::vector<SourceText> sources;
  for (const auto& p : paths) {
    fs::path path(p);
    std::string rel = path.parent_path() == parent
                          ? path.filename().generic_string()
                          : path.generic_string();
    sources.push_back({std::move(rel), read_file(path)});
  }
  return load_sources(sources);
}

}  // namespace locus::minilang
