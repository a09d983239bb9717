#include "gen.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>

namespace locus::testgen {

namespace {

using Rng = std::mt19937;

int pick(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
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

// ---------------------------------------------------------------------------
// Tiny integer IR with its own evaluator, independent of the production
// interpreter; rendered to ml1 text afterwards. Lines (including brace
// lines) are fixed at construction time.
// ---------------------------------------------------------------------------

enum class GOp { Add, Sub, Mul };
enum class GRel { Lt, Le, Gt, Ge, Eq, Ne };

struct GExpr {
  enum Kind { Var, Const, Bin } kind = Const;
  std::string var;
  long long value = 0;
  GOp op = GOp::Add;
  std::unique_ptr<GExpr> lhs, rhs;
};
using GExprPtr = std::unique_ptr<GExpr>;

GExprPtr g_var(std::string name) {
  auto e = std::make_unique<GExpr>();
  e->kind = GExpr::Var;
  e->var = std::move(name);
  return e;
}
GExprPtr g_const(long long value) {
  auto e = std::make_unique<GExpr>();
  e->kind = GExpr::Const;
  e->value = value;
  return e;
}
GExprPtr g_bin(GOp op, GExprPtr lhs, GExprPtr rhs) {
  auto e = std::make_unique<GExpr>();
  e->kind = GExpr::Bin;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

struct GStmt {
  enum Kind { Assign, If, While } kind = Assign;
  int line = 0;
  int else_brace_line = 0;   // "} else {" (if with else only)
  int close_brace_line = 0;  // "}" (if / while only)
  std::string target;        // assign
  GExprPtr expr;
  GExprPtr cond_lhs, cond_rhs;  // if / while
  GRel rel = GRel::Lt;
  std::vector<GStmt> body, else_body;
};

long long eval_expr(const GExpr& e,
                    const std::map<std::string, long long>& env) {
  switch (e.kind) {
    case GExpr::Var: return env.at(e.var);
    case GExpr::Const: return e.value;
    case GExpr::Bin: {
      const long long a = eval_expr(*e.lhs, env);
      const long long b = eval_expr(*e.rhs, env);
      if (e.op == GOp::Add) return wrap_add(a, b);
      if (e.op == GOp::Sub) return wrap_sub(a, b);
      return wrap_mul(a, b);
    }
  }
  return 0;
}

bool eval_rel(GRel rel, long long a, long long b) {
  switch (rel) {
    case GRel::Lt: return a < b;
    case GRel::Le: return a <= b;
    case GRel::Gt: return a > b;
    case GRel::Ge: return a >= b;
    case GRel::Eq: return a == b;
    case GRel::Ne: return a != b;
  }
  return false;
}

struct EvalState {
  std::map<std::string, long long> env;
  std::map<int, int> counts;  // per-line predicate occurrence
  std::vector<GInstance> instances;
  std::optional<std::pair<int, int>> flip;  // (line, index)
};

bool eval_cond(const GStmt& s, EvalState& state) {
  bool outcome = eval_rel(s.rel, eval_expr(*s.cond_lhs, state.env),
                          eval_expr(*s.cond_rhs, state.env));
  const int index = state.counts[s.line]++;
  if (state.flip && state.flip->first == s.line && state.flip->second == index)
    outcome = !outcome;
  state.instances.push_back({s.line, index, outcome});
  return outcome;
}

void eval_block(const std::vector<GStmt>& body, EvalState& state) {
  for (const auto& s : body) {
    switch (s.kind) {
      case GStmt::Assign:
        state.env[s.target] = eval_expr(*s.expr, state.env);
        break;
      case GStmt::If:
        if (eval_cond(s, state))
          eval_block(s.body, state);
        else
          eval_block(s.else_body, state);
        break;
      case GStmt::While:
        while (eval_cond(s, state)) eval_block(s.body, state);
        break;
    }
  }
}

struct GFunction {
  std::vector<std::string> vars;  // locals in declaration order
  std::vector<GStmt> body;
  GExprPtr result;
  int header_line = 1;
  int vars_line = 2;    // all `let` initializations share one line
  int return_line = 0;
  int close_line = 0;
};

struct EvalOutcome {
  long long value = 0;
  std::vector<GInstance> instances;
};

EvalOutcome eval_function(const GFunction& fn, long long arg,
                          std::optional<std::pair<int, int>> flip) {
  EvalState state;
  state.flip = flip;
  state.env["x"] = arg;
  for (const auto& var : fn.vars) state.env[var] = 0;
  eval_block(fn.body, state);
  return {eval_expr(*fn.result, state.env), std::move(state.instances)};
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

struct Builder {
  Rng rng;
  int next_line = 0;
  std::vector<std::string> vars;
  int loop_counters = 0;

  explicit Builder(unsigned seed) : rng(seed) {}

  GExprPtr rand_operand() {
    if (pick(rng, 0, 2) == 0) return g_const(pick(rng, -4, 9));
    if (pick(rng, 0, 3) == 0) return g_var("x");
    return g_var(vars[static_cast<std::size_t>(pick(
        rng, 0, static_cast<int>(vars.size()) - 1))]);
  }

  GExprPtr rand_expr(int depth = 0) {
    if (depth >= 2 || pick(rng, 0, 1) == 0) return rand_operand();
    const GOp op = static_cast<GOp>(pick(rng, 0, 2));
    return g_bin(op, rand_expr(depth + 1), rand_expr(depth + 1));
  }

  GStmt assign_stmt() {
    GStmt s;
    s.kind = GStmt::Assign;
    s.line = next_line++;
    s.target = vars[static_cast<std::size_t>(
        pick(rng, 0, static_cast<int>(vars.size()) - 1))];
    s.expr = rand_expr();
    return s;
  }

  std::vector<GStmt> block(int depth, int max_stmts) {
    std::vector<GStmt> body;
    const int n = pick(rng, 1, max_stmts);
    for (int i = 0; i < n; ++i) {
      const int roll = pick(rng, 0, 9);
      GStmt s;
      if (depth < 2 && roll >= 7) {
        s = if_stmt(depth);
      } else if (depth < 2 && roll >= 5 && loop_counters < 3) {
        s = while_stmt(depth);
      } else {
        s = assign_stmt();
      }
      // A while's counter reset was queued just before its header; keep
      // evaluation order aligned with the rendered line order.
      for (auto& reset : pending_resets) body.push_back(std::move(reset));
      pending_resets.clear();
      body.push_back(std::move(s));
    }
    return body;
  }

  GStmt if_stmt(int depth) {
    GStmt s;
    s.kind = GStmt::If;
    s.line = next_line++;
    s.cond_lhs = rand_operand();
    s.cond_rhs = rand_operand();
    s.rel = static_cast<GRel>(pick(rng, 0, 5));
    s.body = block(depth + 1, 2);
    if (pick(rng, 0, 1) == 1) {
      s.else_brace_line = next_line++;
      s.else_body = block(depth + 1, 2);
    }
    s.close_brace_line = next_line++;
    return s;
  }

  GStmt while_stmt(int depth) {
    // `counter = 0; while counter < bound { ...; counter = counter + 1; }`
    // Counters only ever step upward, so any single flip still terminates.
    const std::string counter = "i" + std::to_string(loop_counters++);
    GStmt reset;
    reset.kind = GStmt::Assign;
    reset.line = next_line++;
    reset.target = counter;
    reset.expr = g_const(0);
    pending_resets.push_back(std::move(reset));

    GStmt s;
    s.kind = GStmt::While;
    s.line = next_line++;
    s.cond_lhs = g_var(counter);
    s.cond_rhs = g_const(pick(rng, 1, 6));
    s.rel = GRel::Lt;
    s.body = block(depth + 1, 2);
    GStmt step;
    step.kind = GStmt::Assign;
    step.line = next_line++;
    step.target = counter;
    step.expr = g_bin(GOp::Add, g_var(counter), g_const(1));
    s.body.push_back(std::move(step));
    s.close_brace_line = next_line++;
    counters.push_back(counter);
    return s;
  }

  // while_stmt() emits its counter reset just before the loop header; the
  // block builder splices these in order.
  std::vector<GStmt> pending_resets;
  std::vector<std::string> counters;
};

}  // namespace

GeneratedProgram gen_ps_program(unsigned seed) {
  Builder b(seed + 1);
  const int var_count = pick(b.rng, 2, 4);
  for (int i = 0; i < var_count; ++i)
    b.vars.push_back(std::string(1, static_cast<char>('a' + i)));

  GFunction fn;
  fn.vars = b.vars;
  fn.header_line = 1;
  fn.vars_line = 2;
  b.next_line = 3;

  fn.body = b.block(0, 6);

  GExprPtr result = g_var(b.vars[0]);
  for (std::size_t i = 1; i < b.vars.size(); ++i)
    result = g_bin(GOp::Add, std::move(result), g_var(b.vars[i]));
  fn.result = std::move(result);
  fn.return_line = b.next_line++;
  fn.close_line = b.next_line++;

  // Tests: pass the baseline to some, a (maybe) fixable expectation to the
  // failing ones.
  GeneratedProgram out;
  const int num_failing = pick(b.rng, 1, 2);
  const int num_passing = pick(b.rng, 0, 1);
  struct TestSpec {
    std::string name;
    long long arg;
    long long expected;
    bool failing;
    bool fixable;
  };
  std::vector<TestSpec> specs;

  int sequence = 0;
  int max_instances = 0;
  for (int i = 0; i < num_failing + num_passing; ++i) {
    const bool failing = i < num_failing;
    const long long arg = pick(b.rng, -3, 9);
    const EvalOutcome baseline = eval_function(fn, arg, std::nullopt);
    max_instances =
        std::max(max_instances, static_cast<int>(baseline.instances.size()));

    TestSpec spec;
    spec.name = "test_g" + std::to_string(sequence++);
    spec.arg = arg;
    spec.failing = failing;
    spec.fixable = false;
    if (!failing) {
      spec.expected = baseline.value;
    } else {
      spec.expected = wrap_add(baseline.value, 1);  // unfixable unless lucky
      if (!baseline.instances.empty() && pick(b.rng, 0, 3) != 0) {
        for (int attempt = 0; attempt < 5; ++attempt) {
          const auto& inst = baseline.instances[static_cast<std::size_t>(
              pick(b.rng, 0,
                   static_cast<int>(baseline.instances.size()) - 1))];
          const EvalOutcome flipped =
              eval_function(fn, arg, std::make_pair(inst.line, inst.index));
          if (flipped.value != baseline.value) {
            spec.expected = flipped.value;
            spec.fixable = true;
            break;
          }
        }
      }
    }
    specs.push_back(std::move(spec));
  }

  // Render.
  std::map<int, std::string> lines;
  lines[fn.header_line] = "fn f(x) {";
  {
    std::string decls;
    for (const auto& var : fn.vars) decls += "let " + var + " = 0; ";
    for (const auto& counter : b.counters) decls += "let " + counter + " = 0; ";
    decls.pop_back();
    lines[fn.vars_line] = "    " + decls;
  }

  // Statement renderer over the line map.
  struct Renderer {
    std::map<int, std::string>& lines;

    std::string expr(const GExpr& e) {
      switch (e.kind) {
        case GExpr::Var: return e.var;
        case GExpr::Const:
          return e.value < 0 ? "(" + std::to_string(e.value) + ")"
                             : std::to_string(e.value);
        case GExpr::Bin:
          // Fully parenthesized so the text evaluates exactly like the IR.
          return "(" + expr(*e.lhs) +
                 (e.op == GOp::Add ? " + " : e.op == GOp::Sub ? " - " : " * ") +
                 expr(*e.rhs) + ")";
      }
      return "0";
    }

    std::string cond(const GStmt& s) {
      const char* rel = "<";
      switch (s.rel) {
        case GRel::Lt: rel = "<"; break;
        case GRel::Le: rel = "<="; break;
        case GRel::Gt: rel = ">"; break;
        case GRel::Ge: rel = ">="; break;
        case GRel::Eq: rel = "=="; break;
        case GRel::Ne: rel = "!="; break;
      }
      return expr(*s.cond_lhs) + " " + rel + " " + expr(*s.cond_rhs);
    }

    void block(const std::vector<GStmt>& body, int depth) {
      const std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
      for (const auto& s : body) {
        switch (s.kind) {
          case GStmt::Assign:
            lines[s.line] = indent + s.target + " = " + expr(*s.expr) + ";";
            break;
          case GStmt::If:
            lines[s.line] = indent + "if " + cond(s) + " {";
            block(s.body, depth + 1);
            if (s.else_brace_line != 0) {
              lines[s.else_brace_line] = indent + "} else {";
              block(s.else_body, depth + 1);
            }
            lines[s.close_brace_line] = indent + "}";
            break;
          case GStmt::While:
            lines[s.line] = indent + "while " + cond(s) + " {";
            block(s.body, depth + 1);
            lines[s.close_brace_line] = indent + "}";
            break;
        }
      }
    }
  } renderer{lines};

  renderer.block(fn.body, 1);
  lines[fn.return_line] = "    return " + renderer.expr(*fn.result) + ";";
  lines[fn.close_line] = "}";

  int line = fn.close_line + 1;
  for (const auto& spec : specs) {
    ++line;  // blank separator
    lines[line++] = "fn " + spec.name + "() {";
    lines[line++] = "    let r = f(" +
                    (spec.arg < 0 ? "(" + std::to_string(spec.arg) + ")"
                                  : std::to_string(spec.arg)) +
                    ");";
    lines[line++] = "    assert r == " +
                    (spec.expected < 0
                         ? "(" + std::to_string(spec.expected) + ")"
                         : std::to_string(spec.expected)) +
                    ";";
    lines[line++] = "}";
    out.tests.push_back({spec.name, spec.failing, spec.fixable});
  }

  const int last = lines.empty() ? 0 : lines.rbegin()->first;
  std::string source;
  for (int i = 1; i <= last; ++i) {
    auto it = lines.find(i);
    if (it != lines.end()) source += it->second;
    source += "\n";
  }
  out.source = std::move(source);
  out.max_instances = max_instances;
  return out;
}

// ---------------------------------------------------------------------------
// Syntax-rich source for round-trip checks
// ---------------------------------------------------------------------------

std::string gen_rich_source(unsigned seed) {
  Rng rng(seed + 77);
  std::string out;
  const int fns = pick(rng, 1, 3);
  for (int i = 0; i < fns; ++i) {
    const std::string name = "helper_" + std::to_string(i);
    out += "fn " + name + "(p0, p1) {\n";
    const int n = pick(rng, 2, 5);
    std::string last = "p0";
    for (int s = 0; s < n; ++s) {
      const std::string var = "v" + std::to_string(s);
      switch (pick(rng, 0, 5)) {
        case 0:
          out += "    let " + var + " = p0 * " +
                 std::to_string(pick(rng, 1, 9)) + " + p1;\n";
          break;
        case 1:
          out += "    let " + var + " = " +
                 std::to_string(pick(rng, 0, 99)) + "." +
                 std::to_string(pick(rng, 0, 9)) + " / (p1 + 1.5);\n";
          break;
        case 2:
          out += "    let " + var + " = !(p0 == p1) and p0 < " +
                 std::to_string(pick(rng, 1, 5)) + " or p1 >= 2;\n";
          break;
        case 3:
          out += "    let " + var + " = -p0 - -" +
                 std::to_string(pick(rng, 1, 5)) + ";\n";
          out += "    if " + var + " != 0 {\n        " + var + " = " + var +
                 " + 1;\n    } else {\n        " + var + " = sqrt(abs(" +
                 var + ") + 0.25);\n    }\n";
          break;
        case 4:
          out += "    let " + var + " = pow(abs(p0), 2);\n";
          out += "    assert approx(" + var + ", " + var + ", 1e-6);\n";
          break;
        default:
          out += "    fn inner_" + std::to_string(s) + "(q) {\n";
          out += "        return q * (p0 + " +
                 std::to_string(pick(rng, 1, 4)) + ");\n";
          out += "    }\n";
          out += "    let " + var + " = inner_" + std::to_string(s) +
                 "(p1) + 0.5;\n";
          break;
      }
      last = var;
    }
    out += "    while p0 < p1 {\n        return " + last + ";\n    }\n";
    out += "    return " + last + ";\n";
    out += "}\n\n";
  }
  out += "fn test_rich() {\n    let r = helper_0(1, 2);\n";
  out += "    assert r == r;\n}\n";
  return out;
}

}  // namespace locus::testgen
