#include "locus/minilang/mutate.hpp"

#include <array>
#include <functional>

#include "locus/errors.hpp"
#include "locus/minilang/printer.hpp"

namespace locus::minilang {

const char* mut_operator_name(MutOperator op) {
  switch (op) {
    case MutOperator::AOR: return "AOR";
    case MutOperator::ROR: return "ROR";
    case MutOperator::LCR: return "LCR";
    case MutOperator::LIT: return "LIT";
  }
  return "AOR";
}

MutOperator mut_operator_from_name(const std::string& name) {
  if (name == "AOR") return MutOperator::AOR;
  if (name == "ROR") return MutOperator::ROR;
  if (name == "LCR") return MutOperator::LCR;
  if (name == "LIT") return MutOperator::LIT;
  raise(ErrorCode::FormatError, "unknown mutation operator \"" + name + "\"");
}

namespace {

constexpr std::array<BinOp, 4> kArithTable = {BinOp::Add, BinOp::Sub,
                                              BinOp::Mul, BinOp::Div};
constexpr std::array<BinOp, 6> kRelTable = {BinOp::Eq, BinOp::Ne, BinOp::Lt,
                                            BinOp::Le, BinOp::Gt, BinOp::Ge};

bool is_arith(BinOp op) {
  return op == BinOp::Add || op == BinOp::Sub || op == BinOp::Mul ||
         op == BinOp::Div;
}
bool is_relational(BinOp op) {
  return op == BinOp::Eq || op == BinOp::Ne || op == BinOp::Lt ||
         op == BinOp::Le || op == BinOp::Gt || op == BinOp::Ge;
}

// Preorder walk over every expression node, statements in source order,
// nested function bodies included. The visit order defines node ordinals.
template <typename ExprT, typename F>
void walk_expr(ExprT& expr, F& fn) {
  fn(expr);
  std::visit(
      [&](auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, UnaryExpr>) {
          walk_expr(*node.operand, fn);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          walk_expr(*node.lhs, fn);
          walk_expr(*node.rhs, fn);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          for (auto& arg : node.args) walk_expr(*arg, fn);
        }
      },
      expr.node);
}

template <typename StmtT, typename F>
void walk_stmt(StmtT& stmt, F& fn) {
  std::visit(
      [&](auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LetStmt>) {
          walk_expr(*node.init, fn);
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          walk_expr(*node.value, fn);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          walk_expr(*node.cond, fn);
          for (auto& inner : node.then_body) walk_stmt(inner, fn);
          for (auto& inner : node.else_body) walk_stmt(inner, fn);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          walk_expr(*node.cond, fn);
          for (auto& inner : node.body) walk_stmt(inner, fn);
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          if (node.value) walk_expr(*node.value, fn);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          walk_expr(*node.expr, fn);
        } else if constexpr (std::is_same_v<T, AssertStmt>) {
          walk_expr(*node.cond, fn);
        } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
          walk_expr(*node.lhs, fn);
          walk_expr(*node.rhs, fn);
          if (node.tol) walk_expr(*node.tol, fn);
        } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
          for (auto& inner : node.fn->body) walk_stmt(inner, fn);
        }
      },
      stmt.node);
}

struct ExprSite {
  const Expr* node;
  std::string file;
  int ordinal;
};

std::vector<ExprSite> collect_sites(const Program& program) {
  std::vector<ExprSite> sites;
  int ordinal = 0;
  for (const auto& file : program.files) {
    auto fn = [&](const Expr& expr) {
      sites.push_back({&expr, file.path, ordinal++});
    };
    for (const auto& decl : file.functions)
      for (const auto& stmt : decl.body) walk_stmt(stmt, fn);
  }
  return sites;
}

Expr* find_by_ordinal(Program& program, int ordinal) {
  Expr* found = nullptr;
  int counter = 0;
  for (auto& file : program.files) {
    auto fn = [&](Expr& expr) {
      if (counter++ == ordinal) found = &expr;
    };
    for (auto& decl : file.functions)
      for (auto& stmt : decl.body) walk_stmt(stmt, fn);
  }
  return found;
}

struct Edit {
  MutOperator op;
  bool replace_op = false;
  BinOp new_op = BinOp::Add;
  bool replace_int = false;
  long long new_int = 0;
  bool replace_float = false;
  double new_float = 0.0;
};

void apply_edit(Expr& expr, const Edit& edit) {
  if (edit.replace_op) std::get<BinaryExpr>(expr.node).op = edit.new_op;
  if (edit.replace_int) std::get<IntLit>(expr.node).value = edit.new_int;
  if (edit.replace_float) std::get<FloatLit>(expr.node).value = edit.new_float;
}

std::vector<Edit> edits_for(const Expr& expr,
                            const std::set<MutOperator>& operators) {
  std::vector<Edit> edits;
  if (const auto* binary = std::get_if<BinaryExpr>(&expr.node)) {
    if (is_arith(binary->op) && operators.count(MutOperator::AOR)) {
      for (BinOp candidate : kArithTable)
        if (candidate != binary->op)
          edits.push_back({MutOperator::AOR, true, candidate});
    } else if (is_relational(binary->op) && operators.count(MutOperator::ROR)) {
      for (BinOp candidate : kRelTable)
        if (candidate != binary->op)
          edits.push_back({MutOperator::ROR, true, candidate});
    } else if ((binary->op == BinOp::And || binary->op == BinOp::Or) &&
               operators.count(MutOperator::LCR)) {
      edits.push_back({MutOperator::LCR, true,
                       binary->op == BinOp::And ? BinOp::Or : BinOp::And});
    }
  } else if (const auto* int_lit = std::get_if<IntLit>(&expr.node)) {
    if (operators.count(MutOperator::LIT)) {
      Edit minus;
      minus.op = MutOperator::LIT;
      minus.replace_int = true;
      minus.new_int = int_lit->value - 1;
      Edit plus = minus;
      plus.new_int = int_lit->value + 1;
      edits.push_back(minus);
      edits.push_back(plus);
    }
  } else if (const auto* float_lit = std::get_if<FloatLit>(&expr.node)) {
    if (operators.count(MutOperator::LIT)) {
      Edit minus;
      minus.op = MutOperator::LIT;
      minus.replace_float = true;
      minus.new_float = float_lit->value - 1.0;
      Edit plus = minus;
      plus.new_float = float_lit->value + 1.0;
      edits.push_back(minus);
      edits.push_back(plus);
    }
  }
  return edits;
}

}  // namespace

std::vector<std::pair<Mutant, Program>> mutate(
    const Program& program, const std::set<MutOperator>& operators) {
  std::vector<std::pair<Mutant, Program>> out;
  int next_id = 1;
  for (const ExprSite& site : collect_sites(program)) {
    for (const Edit& edit : edits_for(*site.node, operators)) {
      Program mutated = clone(program);
      Expr* target = find_by_ordinal(mutated, site.ordinal);
      const std::string before = print_expr(*target);
      apply_edit(*target, edit);
      const std::string after = print_expr(*target);

      Mutant mutant;
      mutant.id = "m" + std::to_string(next_id++);
      mutant.location = Entity::statement(site.file, site.node->line);
      mutant.op_tag = mut_operator_name(edit.op);
      mutant.description = before + " -> " + after;
      out.emplace_back(std::move(mutant), std::move(mutated));
    }
  }
  return out;
}

}  // namespace locus::minilang
