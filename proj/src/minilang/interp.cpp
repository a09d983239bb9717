#include "locus/minilang/interp.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <variant>

#include "locus/errors.hpp"

namespace locus::minilang {

namespace {

// Unit (the value of a call to a function that never returned) is only
// storable; every operation on it is a type error.
using Value = std::variant<std::monostate, long long, double, bool>;

bool is_number(const Value& v) {
  return std::holds_alternative<long long>(v) ||
         std::holds_alternative<double>(v);
}
bool is_int(const Value& v) { return std::holds_alternative<long long>(v); }
bool is_bool(const Value& v) { return std::holds_alternative<bool>(v); }

double as_double(const Value& v) {
  if (std::holds_alternative<long long>(v))
    return static_cast<double>(std::get<long long>(v));
  return std::get<double>(v);
}

long long wrap_add(long long a, long long b) {
  return static_cast<long long>(static_cast<unsigned long long>(a) +
                                static_cast<unsigned long long>(b));
}
long long wrap_sub(long long a, long long b) {
  return static_cast<long long>(static_cast<unsigned long long>(a) -
                                static_cast<unsigned long long>(b));
}
long long wrap_mul(long long a, long long b) {
  return static_cast<long long>(static_cast<unsigned long long>(a) *
                                static_cast<unsigned long long>(b));
}

std::string format_value(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "<unit>";
  if (std::holds_alternative<bool>(v))
    return std::get<bool>(v) ? "true" : "false";
  if (std::holds_alternative<long long>(v))
    return std::to_string(std::get<long long>(v));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v));
  return buf;
}

const char* type_name(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "unit";
  if (std::holds_alternative<bool>(v)) return "bool";
  if (std::holds_alternative<long long>(v)) return "int";
  return "float";
}

// Control-flow signals.
struct ReturnSignal {
  Value value;
};
struct AssertSignal {
  std::string detail;
};
struct CrashSignal {
  locus::TestOutcome outcome;
};
struct BudgetSignal {};
struct DepthSignal {};

constexpr int kMaxCallDepth = 5'000;

class Interpreter {
 public:
  Interpreter(const ProgramModel& model, const ExecOptions& options)
      : model_(model), options_(options) {}

  RunResult run(const std::string& test_name) {
    const FunctionInfo* test = nullptr;
    for (const auto& info : model_.functions)
      if (info.parent == -1 && info.qualified_name == test_name) test = &info;
    if (test == nullptr || !test->is_test || !test->params.empty())
      raise(ErrorCode::UnknownTest,
            "no runnable test named \"" + test_name + "\"");

    RunResult result;
    try {
      call_function(*test->decl, test, {}, -1);
      result.outcome = locus::TestOutcome::pass();
    } catch (const ReturnSignal&) {
      result.outcome = locus::TestOutcome::pass();
    } catch (const AssertSignal& signal) {
      result.outcome = locus::TestOutcome::fail(signal.detail);
    } catch (const BudgetSignal&) {
      result.outcome = locus::TestOutcome::fail("step budget exhausted");
    } catch (const DepthSignal&) {
      result.outcome = locus::TestOutcome::fail("call depth limit exceeded");
    } catch (const CrashSignal& signal) {
      result.outcome = signal.outcome;
    }
    result.covered_lines.assign(covered_.begin(), covered_.end());
    result.predicate_instances = std::move(instances_);
    result.steps_used = steps_;
    return result;
  }

 private:
  struct FrameRec {
    const FunctionDecl* decl = nullptr;
    const FunctionInfo* info = nullptr;
    int current_line = 0;
    std::map<std::string, Value> locals;
    // name -> (declaration, index of the frame that executed it)
    std::map<std::string, std::pair<const FunctionDecl*, int>> local_fns;
    int defining_frame = -1;  // lexical parent instance
  };

  const ProgramModel& model_;
  const ExecOptions& options_;
  std::vector<std::unique_ptr<FrameRec>> frames_;
  std::set<std::pair<std::string, int>> covered_;
  std::vector<PredicateInstanceRec> instances_;
  std::map<std::pair<std::string, int>, int> predicate_counts_;
  std::uint64_t steps_ = 0;

  void tick() {
    if (++steps_ > options_.step_budget) throw BudgetSignal{};
  }

  [[noreturn]] void crash(const std::string& kind,
                          const std::string& message) {
    locus::StackTrace trace;
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it)
      trace.frames.push_back({(*it)->info->qualified_name, (*it)->info->file,
                              (*it)->current_line});
    throw CrashSignal{
        locus::TestOutcome::crash(kind + ": " + message, std::move(trace))};
  }

  // Runs `decl` as a new frame and yields its return value (unit when the
  // body falls off the end).
  Value call_function(const FunctionDecl& decl, const FunctionInfo* info,
                      std::vector<Value> args, int defining_frame) {
    if (static_cast<int>(frames_.size()) >= kMaxCallDepth)
      throw DepthSignal{};
    auto frame = std::make_unique<FrameRec>();
    frame->decl = &decl;
    frame->info = info;
    frame->current_line = decl.line;
    frame->defining_frame = defining_frame;
    for (std::size_t i = 0; i < decl.params.size(); ++i)
      frame->locals[decl.params[i]] = std::move(args[i]);
    frames_.push_back(std::move(frame));

    Value result = std::monostate{};
    try {
      exec_body(decl.body);
    } catch (ReturnSignal& signal) {
      result = std::move(signal.value);
    } catch (...) {
      frames_.pop_back();
      throw;
    }
    frames_.pop_back();
    return result;
  }

  FrameRec& top() { return *frames_.back(); }

  void exec_body(const std::vector<Stmt>& body) {
    for (const auto& stmt : body) exec_statement(stmt);
  }

  void exec_statement(const Stmt& stmt) {
    tick();
    FrameRec& frame = top();
    frame.current_line = stmt.line;
    const std::string& file = frame.info->file;
    if (options_.trace_coverage) covered_.insert({file, stmt.line});
    if (options_.on_statement) options_.on_statement(file, stmt.line);

    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            top().locals[node.name] = eval(*node.init);
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            top().locals[node.name] = eval(*node.value);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            if (eval_condition(*node.cond, stmt.line))
              exec_body(node.then_body);
            else
              exec_body(node.else_body);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            while (eval_condition(*node.cond, stmt.line))
              exec_body(node.body);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            throw ReturnSignal{node.value ? eval(*node.value)
                                          : Value{std::monostate{}}};
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            eval(*node.expr);
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            const Value v = eval(*node.cond);
            if (!is_bool(v))
              crash("TypeError", std::string("assert needs a bool, got ") +
                                     type_name(v));
            if (!std::get<bool>(v))
              throw AssertSignal{"assertion failed at " + where(stmt.line)};
          } else if constexpr (std::is_same_v<T, AssertApproxStmt>) {
            exec_assert_approx(node, stmt.line);
          } else if constexpr (std::is_same_v<T, FnDeclStmt>) {
            top().local_fns[node.fn->name] = {
                node.fn.get(), static_cast<int>(frames_.size()) - 1};
          }
        },
        stmt.node);
  }

  std::string where(int line) {
    return top().info->file + ":" + std::to_string(line);
  }

  void exec_assert_approx(const AssertApproxStmt& node, int line) {
    const Value lhs = eval(*node.lhs);
    const Value rhs = eval(*node.rhs);
    if (!is_number(lhs) || !is_number(rhs))
      crash("TypeError", "approx needs numbers");
    double tol = 1e-9;
    if (node.tol) {
      const Value t = eval(*node.tol);
      if (!is_number(t)) crash("TypeError", "approx tolerance must be a number");
      tol = as_double(t);
    }
    const double a = as_double(lhs);
    const double b = as_double(rhs);
    if (!(std::fabs(a - b) <= tol)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "approx failed: |%.17g - %.17g| > %g",
                    a, b, tol);
      throw AssertSignal{std::string(buf) + " at " + where(line)};
    }
  }

  bool eval_condition(const Expr& cond, int line) {
    const Value v = eval(cond);
    if (!is_bool(v))
      crash("TypeError",
            std::string("condition must be a bool, got ") + type_name(v));
    bool outcome = std::get<bool>(v);

    const std::string& file = top().info->file;
    const int index = predicate_counts_[{file, line}]++;
    if (options_.flip && options_.flip->file == file &&
        options_.flip->line == line && options_.flip->index == index)
      outcome = !outcome;
    if (options_.record_predicates)
      instances_.push_back({file, line, index, outcome});
    return outcome;
  }

  Value eval(const Expr& expr) {
    tick();
    top().current_line = expr.line;
    return std::visit(
        [&](const auto& node) -> Value {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return node.value;
          } else if constexpr (std::is_same_v<T, FloatLit>) {
            return node.value;
          } else if constexpr (std::is_same_v<T, BoolLit>) {
            return node.value;
          } else if constexpr (std::is_same_v<T, VarRef>) {
            return read_variable(node.name);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            return eval_unary(node);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            return eval_binary(node);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            return eval_call(node);
          }
        },
        expr.node);
  }

  Value read_variable(const std::string& name) {
    FrameRec& frame = top();
    auto it = frame.locals.find(name);
    if (it != frame.locals.end()) return it->second;
    // Enclosing-function parameters, read-only, through the lexical chain.
    for (int i = frame.defining_frame; i != -1;
         i = frames_[i]->defining_frame) {
      const FrameRec& outer = *frames_[i];
      for (const auto& param : outer.decl->params) {
        if (param != name) continue;
        return outer.locals.at(name);
      }
    }
    crash("UnboundName", "variable \"" + name + "\" has no value yet");
  }

  Value eval_unary(const UnaryExpr& node) {
    Value v = eval(*node.operand);
    if (node.op == UnOp::Neg) {
      if (is_int(v)) return wrap_sub(0, std::get<long long>(v));
      if (is_number(v)) return -std::get<double>(v);
      crash("TypeError", std::string("cannot negate ") + type_name(v));
    }
    if (!is_bool(v))
      crash("TypeError", std::string("\"!\" needs a bool, got ") +
                             type_name(v));
    return !std::get<bool>(v);
  }

  Value eval_binary(const BinaryExpr& node) {
    if (node.op == BinOp::And || node.op == BinOp::Or) {
      const Value lhs = eval(*node.lhs);
      if (!is_bool(lhs))
        crash("TypeError", std::string(bin_op_text(node.op)) +
                               " needs bools, got " + type_name(lhs));
      const bool l = std::get<bool>(lhs);
      if (node.op == BinOp::And && !l) return false;
      if (node.op == BinOp::Or && l) return true;
      const Value rhs = eval(*node.rhs);
      if (!is_bool(rhs))
        crash("TypeError", std::string(bin_op_text(node.op)) +
                               " needs bools, got " + type_name(rhs));
      return std::get<bool>(rhs);
    }

    const Value lhs = eval(*node.lhs);
    const Value rhs = eval(*node.rhs);
    switch (node.op) {
      case BinOp::Add:
      case BinOp::Sub:
      case BinOp::Mul: {
        require_numbers(node.op, lhs, rhs);
        if (is_int(lhs) && is_int(rhs)) {
          const long long a = std::get<long long>(lhs);
          const long long b = std::get<long long>(rhs);
          if (node.op == BinOp::Add) return wrap_add(a, b);
          if (node.op == BinOp::Sub) return wrap_sub(a, b);
          return wrap_mul(a, b);
        }
        const double a = as_double(lhs);
        const double b = as_double(rhs);
        if (node.op == BinOp::Add) return a + b;
        if (node.op == BinOp::Sub) return a - b;
        return a * b;
      }
      case BinOp::Div: {
        require_numbers(node.op, lhs, rhs);
        const double b = as_double(rhs);
        if (b == 0.0) crash("DivisionByZero", "division by zero");
        return as_double(lhs) / b;
      }
      case BinOp::Eq:
      case BinOp::Ne: {
        bool equal;
        if (is_number(lhs) && is_number(rhs)) {
          if (is_int(lhs) && is_int(rhs))
            equal = std::get<long long>(lhs) == std::get<long long>(rhs);
          else
            equal = as_double(lhs) == as_double(rhs);
        } else if (is_bool(lhs) && is_bool(rhs)) {
          equal = std::get<bool>(lhs) == std::get<bool>(rhs);
        } else {
          crash("TypeError", std::string("cannot compare ") + type_name(lhs) +
                                 " with " + type_name(rhs));
        }
        return node.op == BinOp::Eq ? equal : !equal;
      }
      case BinOp::Lt:
      case BinOp::Le:
      case BinOp::Gt:
      case BinOp::Ge: {
        require_numbers(node.op, lhs, rhs);
        if (is_int(lhs) && is_int(rhs)) {
          const long long a = std::get<long long>(lhs);
          const long long b = std::get<long long>(rhs);
          if (node.op == BinOp::Lt) return a < b;
          if (node.op == BinOp::Le) return a <= b;
          if (node.op == BinOp::Gt) return a > b;
          return a >= b;
        }
        const double a = as_double(lhs);
        const double b = as_double(rhs);
        if (node.op == BinOp::Lt) return a < b;
        if (node.op == BinOp::Le) return a <= b;
        if (node.op == BinOp::Gt) return a > b;
        return a >= b;
      }
      default: break;
    }
    crash("TypeError", "unreachable operator");
  }

  void require_numbers(BinOp op, const Value& lhs, const Value& rhs) {
    if (!is_number(lhs) || !is_number(rhs))
      crash("TypeError", std::string("\"") + bin_op_text(op) +
                             "\" needs numbers, got " + type_name(lhs) +
                             " and " + type_name(rhs));
  }

  Value eval_call(const CallExpr& node) {
    std::vector<Value> args;
    args.reserve(node.args.size());
    for (const auto& arg : node.args) args.push_back(eval(*arg));

    if (is_builtin(node.callee)) return eval_builtin(node.callee, args);

    // Nested functions bound in the current frame or up the lexical chain
    // shadow top-level functions.
    for (int i = static_cast<int>(frames_.size()) - 1; i != -1;
         i = frames_[i]->defining_frame) {
      const auto it = frames_[i]->local_fns.find(node.callee);
      if (it == frames_[i]->local_fns.end()) {
        if (frames_[i]->defining_frame == -1) break;
        continue;
      }
      const FunctionDecl* decl = it->second.first;
      return call_function(*decl, model_.info_for(decl), std::move(args),
                           it->second.second);
    }
    for (const auto& info : model_.functions) {
      if (info.parent != -1 || info.qualified_name != node.callee) continue;
      return call_function(*info.decl, &info, std::move(args), -1);
    }
    crash("UnboundName",
          "function \"" + node.callee + "\" is not defined yet");
  }

  Value eval_builtin(const std::string& name, const std::vector<Value>& args) {
    for (const auto& arg : args)
      if (!is_number(arg))
        crash("TypeError", name + " needs numbers, got " + type_name(arg));
    if (name == "sqrt") {
      const double x = as_double(args[0]);
      if (x < 0.0) crash("DomainError", "sqrt of negative " + format_value(args[0]));
      return std::sqrt(x);
    }
    if (name == "pow") {
      const double base = as_double(args[0]);
      const double exp = as_double(args[1]);
      if (base < 0.0 && std::trunc(exp) != exp)
        crash("DomainError", "negative base with fractional exponent");
      if (base == 0.0 && exp < 0.0)
        crash("DomainError", "zero to a negative power");
      return std::pow(base, exp);
    }
    // abs
    if (is_int(args[0])) {
      const long long v = std::get<long long>(args[0]);
      return v < 0 ? wrap_sub(0, v) : v;
    }
    return std::fabs(std::get<double>(args[0]));
  }
};

}  // namespace

RunResult execute_test(const ProgramModel& model, const std::string& test_name,
                       const ExecOptions& options) {
  return Interpreter(model, options).run(test_name);
}

}  // namespace locus::minilang
