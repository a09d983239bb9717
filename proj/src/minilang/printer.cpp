#include "locus/minilang/printer.hpp"

#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

namespace locus::minilang {

namespace {

int precedence(BinOp op) {
  switch (op) {
    case BinOp::Or: return 1;
    case BinOp::And: return 2;
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge: return 3;
    case BinOp::Add:
    case BinOp::Sub: return 4;
    case BinOp::Mul:
    case BinOp::Div: return 5;
  }
  return 0;
}
constexpr int kUnaryPrec = 6;
constexpr int kPrimaryPrec = 7;

int expr_precedence(const Expr& expr) {
  if (std::holds_alternative<BinaryExpr>(expr.node))
    return precedence(std::get<BinaryExpr>(expr.node).op);
  if (std::holds_alternative<UnaryExpr>(expr.node)) return kUnaryPrec;
  return kPrimaryPrec;
}

std::string format_float(double value) {
  // Shortest decimal form that still contains a '.' or exponent, so the
  // token re-lexes as a float.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  for (int digits = 1; digits <= 17; ++digits) {
    char candidate[64];
    std::snprintf(candidate, sizeof(candidate), "%.*g", digits, value);
    double parsed = 0.0;
    std::sscanf(candidate, "%lf", &parsed);
    if (parsed == value) {
      std::snprintf(buf, sizeof(buf), "%s", candidate);
      break;
    }
  }
  std::string text = buf;
  if (text.find('.') == std::string::npos &&
      text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos)
    text += ".0";
  return text;
}

void print_expr_into(const Expr& expr, std::string& out, int min_prec) {
  const int prec = expr_precedence(expr);
  const bool parens = prec < min_prec;
  if (parens) out += "(";
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          out += std::to_string(node.value);
        } else if constexpr (std::is_same_v<T, FloatLit>) {
          out += format_float(node.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          out += node.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, VarRef>) {
          out += node.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          out += un_op_text(node.op);
          print_expr_into(*node.operand, out, kUnaryPrec);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          const int p = precedence(node.op);
          // Right operands of equal precedence get parenthesized so the
          // reparsed tree keeps its shape (comparisons are non-associative
          // on both sides, the rest parse left-associated).
          const bool comparison = p == 3;
          print_expr_into(*node.lhs, out, comparison ? p + 1 : p);
          out += " ";
          out += bin_op_text(node.op);
          out += " ";
          print_expr_into(*node.rhs, out, p + 1);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          out += node.callee;
          out += "(";
          for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (i) out += ", ";
            print_expr_into(*node.args[i], out, 0);
          }
          out += ")";
        }
      },
      expr.node);
  if (parens) out += ")";
}

// Accumulates text on explicit 1-based lines so every node reparses at its
// recorded line; braces (which carry no location) tag along.
class LineSheet {
 public:
  void append(int line, const std::string& text, int indent) {
    if (static_cast<int>(lines_.size()) < line) lines_.resize(line);
    std::string& slot = lines_[line - 1];
    if (slot.empty())
      slot.append(static_cast<std::size_t>(indent) * 4, ' ');
    else
      slot += " ";
    slot += text;
    last_line_ = std::max(last_line_, line);
  }

  int last_line() const { return last_line_; }

  std::string str() const {
    std::string out;
    for (const auto& line : lines_) {
      out += line;
      out += "\n";
    }
    return out;
  }

 private:
  std::vector<std::string> lines_;
  int last_line_ = 0;
};

class SourcePrinter {
 public:
  std::string print(const SourceFile& file) {
    for (const auto& fn : file.functions) emit_function(fn, 0);
    return sheet_.str();
  }

 private:
  void emit_function(const FunctionDecl& fn, int depth) {
    std::string header = "fn " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i) header += ", ";
      header += fn.params[i];
    }
    header += ") {";
    sheet_.append(fn.line, header, depth);
    emit_body(fn.body, depth + 1);
    sheet_.append(sheet_.last_line(), "}", depth);
  }

  void emit_body(const std::vector<Stmt>& body, int depth) {
    for (const auto& stmt : body) emit_statement(stmt, depth);
  }

  void emit_statement(const Stmt& stmt, int depth) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            sheet_.append(stmt.line,
                          "let " + node.name + " = " + render(*node.init) + ";",
                          depth);
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            sheet_.append(stmt.line,
                          node.name + " = " + render(*node.value) + ";", depth);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            sheet_.append(stmt.line, "if " + render(*node.cond) + " {", depth);
            emit_body(node.then_body, depth + 1);
            if (node.else_body.empty()) {
              sheet_.append(sheet_.last_line(), "}", depth);
            } else {
              sheet_.append(sheet_.last_line(), "} else {", depth);
              emit_body(node.else_body, depth + 1);
              sheet_.append(sheet_.last_line(), "}", depth);
            }
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            sheet_.append(stmt.line, "while " + render(*node.cond) + " {",
                          depth);
            emit_body(node.body, depth + 1);
            sheet_.append(sheet_.last_line(), "}", depth);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            sheet_.append(stmt.line,
                          node.value ? "return " + render(*node.value) + ";"
                                     : std::string("return;"),
                          depth);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            sheet_.append(stmt.line, render(*node.expr) + ";", depth);
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            sheet_.append(stmt.line, "assert " + render(*node.cond) + ";",
                          depth);
          } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
            std::string text =
                "assert approx(" + render(*node.lhs) + ", " + render(*node.rhs);
            if (node.tol) text += ", " + render(*node.tol);
            text += ");";
            sheet_.append(stmt.line, text, depth);
          } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
            emit_function(*node.fn, depth);
          }
        },
        stmt.node);
  }

  static std::string render(const Expr& expr) {
    std::string out;
    print_expr_into(expr, out, 0);
    return out;
  }

  LineSheet sheet_;
};

}  // namespace

std::string print_expr(const Expr& expr) {
  std::string out;
  print_expr_into(expr, out, 0);
  return out;
}

std::string print_source(const SourceFile& file) {
  return SourcePrinter().print(file);
}

}  // namespace locus::minilang
