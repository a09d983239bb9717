#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace locus::minilang {

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class BinOp { Add, Sub, Mul, Div, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnOp { Neg, Not };

const char* bin_op_text(BinOp op);
const char* un_op_text(UnOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
  long long value = 0;
};
struct FloatLit {
  double value = 0.0;
};
struct BoolLit {
  bool value = false;
};
struct VarRef {
  std::string name;
};
struct UnaryExpr {
  UnOp op;
  ExprPtr operand;
};
struct BinaryExpr {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
// User function call or builtin (sqrt, pow, abs).
struct CallExpr {
  std::string callee;
  std::vector<ExprPtr> args;
};

struct Expr {
  int line = 0;
  int col = 0;
  std::variant<IntLit, FloatLit, BoolLit, VarRef, UnaryExpr, BinaryExpr,
               CallExpr>
      node;
};

ExprPtr clone(const Expr& expr);
bool equals(const Expr& a, const Expr& b);  // structural, line-sensitive

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
struct FunctionDecl;

struct LetStmt {
  std::string name;
  ExprPtr init;
};
struct AssignStmt {
  std::string name;
  ExprPtr value;
};
struct IfStmt {
  ExprPtr cond;
  std::vector<Stmt> then_body;
  std::vector<Stmt> else_body;  // may be empty
};
struct WhileStmt {
  ExprPtr cond;
  std::vector<Stmt> body;
};
struct ReturnStmt {
  ExprPtr value;  // null for a bare `return;`
};
struct ExprStmt {
  ExprPtr expr;
};
struct AssertStmt {
  ExprPtr cond;
};
// `assert approx(lhs, rhs[, tol]);` — |lhs - rhs| <= tol, default 1e-9.
struct AssertApproxStmt {
  ExprPtr lhs;
  ExprPtr rhs;
  ExprPtr tol;  // null -> default tolerance
};
// Nested function declaration; executing the statement makes the function
// callable in the enclosing body.
struct FnDeclStmt {
  std::unique_ptr<FunctionDecl> fn;
};

struct Stmt {
  int line = 0;
  std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt, ReturnStmt, ExprStmt,
               AssertStmt, AssertApproxStmt, FnDeclStmt>
      node;
};

Stmt clone(const Stmt& stmt);
std::vector<Stmt> clone(const std::vector<Stmt>& body);
bool equals(const Stmt& a, const Stmt& b);
bool equals(const std::vector<Stmt>& a, const std::vector<Stmt>& b);

// ---------------------------------------------------------------------------
// Functions, files, programs
// ---------------------------------------------------------------------------

struct FunctionDecl {
  std::string name;  // unqualified
  std::vector<std::string> params;
  std::vector<Stmt> body;
  int line = 0;  // declaration line
};

FunctionDecl clone(const FunctionDecl& fn);
bool equals(const FunctionDecl& a, const FunctionDecl& b);

struct SourceFile {
  std::string path;  // project-relative
  std::vector<FunctionDecl> functions;
};

struct Program {
  std::vector<SourceFile> files;
};

Program clone(const Program& program);
bool equals(const Program& a, const Program& b);

// Reserved builtin callee names.
bool is_builtin(const std::string& name);
int builtin_arity(const std::string& name);

}  // namespace locus::minilang
