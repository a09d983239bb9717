#include "locus/minilang/ast.hpp"

namespace locus::minilang {

const char* bin_op_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
  }
  return "?";
}

const char* un_op_text(UnOp op) { return op == UnOp::Neg ? "-" : "!"; }

bool is_builtin(const std::string& name) {
  return name == "sqrt" || name == "pow" || name == "abs";
}

int builtin_arity(const std::string& name) { return name == "pow" ? 2 : 1; }

// ---------------------------------------------------------------------------
// clone
// ---------------------------------------------------------------------------

ExprPtr clone(const Expr& expr) {
  auto out = std::make_unique<Expr>();
  out->line = expr.line;
  out->col = expr.col;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, UnaryExpr>) {
          out->node = UnaryExpr{node.op, clone(*node.operand)};
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          out->node = BinaryExpr{node.op, clone(*node.lhs), clone(*node.rhs)};
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          CallExpr call;
          call.callee = node.callee;
          for (const auto& arg : node.args) call.args.push_back(clone(*arg));
          out->node = std::move(call);
        } else {
          out->node = node;
        }
      },
      expr.node);
  return out;
}

static ExprPtr clone_opt(const ExprPtr& expr) {
  return expr ? clone(*expr) : nullptr;
}

Stmt clone(const Stmt& stmt) {
  Stmt out;
  out.line = stmt.line;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LetStmt>) {
          out.node = LetStmt{node.name, clone(*node.init)};
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          out.node = AssignStmt{node.name, clone(*node.value)};
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          out.node = IfStmt{clone(*node.cond), clone(node.then_body),
                            clone(node.else_body)};
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          out.node = WhileStmt{clone(*node.cond), clone(node.body)};
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          out.node = ReturnStmt{clone_opt(node.value)};
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          out.node = ExprStmt{clone(*node.expr)};
        } else if constexpr (std::is_same_v<T, AssertStmt>) {
          out.node = AssertStmt{clone(*node.cond)};
        } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
          out.node = AssertApproxStmt{clone(*node.lhs), clone(*node.rhs),
                                      clone_opt(node.tol)};
        } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
          out.node =
              FnDeclStmt{std::make_unique<FunctionDecl>(clone(*node.fn))};
        }
      },
      stmt.node);
  return out;
}

std::vector<Stmt> clone(const std::vector<Stmt>& body) {
  std::vector<Stmt> out;
  out.reserve(body.size());
  for (const auto& stmt : body) out.push_back(clone(stmt));
  return out;
}

FunctionDecl clone(const FunctionDecl& fn) {
  FunctionDecl out;
  out.name = fn.name;
  out.params = fn.params;
  out.body = clone(fn.body);
  out.line = fn.line;
  return out;
}

Program clone(const Program& program) {
  Program out;
  out.files.reserve(program.files.size());
  for (const auto& file : program.files) {
    SourceFile copy;
    copy.path = file.path;
    for (const auto& fn : file.functions) copy.functions.push_back(clone(fn));
    out.files.push_back(std::move(copy));
  }
  return out;
}

// ---------------------------------------------------------------------------
// structural equality (line-sensitive)
// ---------------------------------------------------------------------------

bool equals(const Expr& a, const Expr& b) {
  if (a.line != b.line || a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, FloatLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return lhs.op == rhs.op && equals(*lhs.operand, *rhs.operand);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return lhs.op == rhs.op && equals(*lhs.lhs, *rhs.lhs) &&
                 equals(*lhs.rhs, *rhs.rhs);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (lhs.callee != rhs.callee || lhs.args.size() != rhs.args.size())
            return false;
          for (std::size_t i = 0; i < lhs.args.size(); ++i)
            if (!equals(*lhs.args[i], *rhs.args[i])) return false;
          return true;
        }
      },
      a.node);
}

static bool equals_opt(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equals(*a, *b);
}

bool equals(const Stmt& a, const Stmt& b) {
  if (a.line != b.line || a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LetStmt>) {
          return lhs.name == rhs.name && equals(*lhs.init, *rhs.init);
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          return lhs.name == rhs.name && equals(*lhs.value, *rhs.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return equals(*lhs.cond, *rhs.cond) &&
                 equals(lhs.then_body, rhs.then_body) &&
                 equals(lhs.else_body, rhs.else_body);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          return equals(*lhs.cond, *rhs.cond) && equals(lhs.body, rhs.body);
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          return equals_opt(lhs.value, rhs.value);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          return equals(*lhs.expr, *rhs.expr);
        } else if constexpr (std::is_same_v<T, AssertStmt>) {
          return equals(*lhs.cond, *rhs.cond);
        } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
          return equals(*lhs.lhs, *rhs.lhs) && equals(*lhs.rhs, *rhs.rhs) &&
                 equals_opt(lhs.tol, rhs.tol);
        } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
          return equals(*lhs.fn, *rhs.fn);
        }
      },
      a.node);
}

bool equals(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equals(a[i], b[i])) return false;
  return true;
}

bool equals(const FunctionDecl& a, const FunctionDecl& b) {
  return a.name == b.name && a.params == b.params && a.line == b.line &&
         equals(a.body, b.body);
}

bool equals(const Program& a, const Program& b) {
  if (a.files.size() != b.files.size()) return false;
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    const auto& fa = a.files[i];
    const auto& fb = b.files[i];
    if (fa.path != fb.path || fa.functions.size() != fb.functions.size())
      return false;
    for (std::size_t j = 0; j < fa.functions.size(); ++j)
      if (!equals(fa.functions[j], fb.functions[j])) return false;
  }
  return true;
}

}  // namespace locus::minilang
