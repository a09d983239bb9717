#include "locus/minilang/parser.hpp"

#include <utility>

#include "locus/errors.hpp"
#include "locus/minilang/lexer.hpp"

namespace locus::minilang {

namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  SourceFile parse_file() {
    SourceFile out;
    out.path = file_;
    while (!at(TokenKind::EndOfFile)) {
      if (!at(TokenKind::KwFn))
        fail(peek(), "expected function declaration");
      out.functions.push_back(parse_function());
    }
    return out;
  }

 private:
  const Token& peek(std::size_t offset = 0) const {
    const std::size_t i = pos_ + offset;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  const Token& advance() { return tokens_[pos_++]; }

  const Token& expect(TokenKind kind, const char* what) {
    if (!at(kind)) fail(peek(), std::string("expected ") + what);
    return advance();
  }

  [[noreturn]] void fail(const Token& token, const std::string& message) {
    const std::string got =
        token.kind == TokenKind::EndOfFile ? "end of input"
                                           : "\"" + token.text + "\"";
    raise(ErrorCode::ParseFailure,
          file_ + ":" + std::to_string(token.line) + ":" +
              std::to_string(token.col) + ": " + message + ", got " + got);
  }

  FunctionDecl parse_function() {
    FunctionDecl fn;
    fn.line = peek().line;
    expect(TokenKind::KwFn, "\"fn\"");
    fn.name = expect(TokenKind::Identifier, "function name").text;
    expect(TokenKind::LParen, "\"(\"");
    if (!at(TokenKind::RParen)) {
      fn.params.push_back(expect(TokenKind::Identifier, "parameter").text);
      while (at(TokenKind::Comma)) {
        advance();
        fn.params.push_back(expect(TokenKind::Identifier, "parameter").text);
      }
    }
    expect(TokenKind::RParen, "\")\"");
    expect(TokenKind::LBrace, "\"{\"");
    fn.body = parse_block_body();
    return fn;
  }

  // Caller consumed "{"; consumes through the matching "}".
  std::vector<Stmt> parse_block_body() {
    std::vector<Stmt> body;
    while (!at(TokenKind::RBrace)) {
      if (at(TokenKind::EndOfFile)) fail(peek(), "expected \"}\"");
      body.push_back(parse_statement());
    }
    advance();  // }
    return body;
  }

  Stmt parse_statement() {
    Stmt stmt;
    stmt.line = peek().line;
    switch (peek().kind) {
      case TokenKind::KwLet: {
        advance();
        LetStmt let;
        let.name = expect(TokenKind::Identifier, "variable name").text;
        expect(TokenKind::Assign, "\"=\"");
        let.init = parse_expr();
        expect(TokenKind::Semicolon, "\";\"");
        stmt.node = std::move(let);
        return stmt;
      }
      case TokenKind::KwIf: {
        advance();
        IfStmt node;
        node.cond = parse_expr();
        expect(TokenKind::LBrace, "\"{\"");
        node.then_body = parse_block_body();
        if (at(TokenKind::KwElse)) {
          advance();
          expect(TokenKind::LBrace, "\"{\"");
          node.else_body = parse_block_body();
        }
        stmt.node = std::move(node);
        return stmt;
      }
      case TokenKind::KwWhile: {
        advance();
        WhileStmt node;
        node.cond = parse_expr();
        expect(TokenKind::LBrace, "\"{\"");
        node.body = parse_block_body();
        stmt.node = std::move(node);
        return stmt;
      }
      case TokenKind::KwReturn: {
        advance();
        ReturnStmt node;
        if (!at(TokenKind::Semicolon)) node.value = parse_expr();
        expect(TokenKind::Semicolon, "\";\"");
        stmt.node = std::move(node);
        return stmt;
      }
      case TokenKind::KwAssert: {
        advance();
        // `assert approx(a, b[, tol]);` is a dedicated assertion form.
        if (at(TokenKind::Identifier) && peek().text == "approx" &&
            peek(1).kind == TokenKind::LParen) {
          advance();
          advance();
          AssertApproxStmt node;
          node.lhs = parse_expr();
          expect(TokenKind::Comma, "\",\"");
          node.rhs = parse_expr();
          if (at(TokenKind::Comma)) {
            advance();
            node.tol = parse_expr();
          }
          expect(TokenKind::RParen, "\")\"");
          expect(TokenKind::Semicolon, "\";\"");
          stmt.node = std::move(node);
          return stmt;
        }
        AssertStmt node;
        node.cond = parse_expr();
        expect(TokenKind::Semicolon, "\";\"");
        stmt.node = std::move(node);
        return stmt;
      }
      case TokenKind::KwFn: {
        FnDeclStmt node;
        node.fn = std::make_unique<FunctionDecl>(parse_function());
        stmt.node = std::move(node);
        return stmt;
      }
      case TokenKind::Identifier: {
        if (peek(1).kind == TokenKind::Assign) {
          AssignStmt node;
          node.name = advance().text;
          advance();  // =
          node.value = parse_expr();
          expect(TokenKind::Semicolon, "\";\"");
          stmt.node = std::move(node);
          return stmt;
        }
        break;
      }
      default: break;
    }
    ExprStmt node;
    node.expr = parse_expr();
    expect(TokenKind::Semicolon, "\";\"");
    stmt.node = std::move(node);
    return stmt;
  }

  ExprPtr make_expr(const Token& at_token) {
    auto expr = std::make_unique<Expr>();
    expr->line = at_token.line;
    expr->col = at_token.col;
    return expr;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(TokenKind::KwOr)) {
      const Token& op = advance();
      ExprPtr rhs = parse_and();
      auto expr = make_expr(op);
      expr->line = lhs->line;
      expr->col = lhs->col;
      expr->node = BinaryExpr{BinOp::Or, std::move(lhs), std::move(rhs)};
      lhs = std::move(expr);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_comparison();
    while (at(TokenKind::KwAnd)) {
      const Token& op = advance();
      ExprPtr rhs = parse_comparison();
      auto expr = make_expr(op);
      expr->line = lhs->line;
      expr->col = lhs->col;
      expr->node = BinaryExpr{BinOp::And, std::move(lhs), std::move(rhs)};
      lhs = std::move(expr);
    }
    return lhs;
  }

  ExprPtr parse_comparison() {
    ExprPtr lhs = parse_additive();
    BinOp op;
    switch (peek().kind) {
      case TokenKind::EqEq: op = BinOp::Eq; break;
      case TokenKind::NotEq: op = BinOp::Ne; break;
      case TokenKind::Lt: op = BinOp::Lt; break;
      case TokenKind::Le: op = BinOp::Le; break;
      case TokenKind::Gt: op = BinOp::Gt; break;
      case TokenKind::Ge: op = BinOp::Ge; break;
      default: return lhs;
    }
    advance();
    ExprPtr rhs = parse_additive();
    auto expr = std::make_unique<Expr>();
    expr->line = lhs->line;
    expr->col = lhs->col;
    expr->node = BinaryExpr{op, std::move(lhs), std::move(rhs)};
    return expr;
  }

  ExprPtr parse_additive() {
    ExprPtr lhs = parse_multiplicative();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const BinOp op = at(TokenKind::Plus) ? BinOp::Add : BinOp::Sub;
      advance();
      ExprPtr rhs = parse_multiplicative();
      auto expr = std::make_unique<Expr>();
      expr->line = lhs->line;
      expr->col = lhs->col;
      expr->node = BinaryExpr{op, std::move(lhs), std::move(rhs)};
      lhs = std::move(expr);
    }
    return lhs;
  }

  ExprPtr parse_multiplicative() {
    ExprPtr lhs = parse_unary();
    while (at(TokenKind::Star) || at(TokenKind::Slash)) {
      const BinOp op = at(TokenKind::Star) ? BinOp::Mul : BinOp::Div;
      advance();
      ExprPtr rhs = parse_unary();
      auto expr = std::make_unique<Expr>();
      expr->line = lhs->line;
      expr->col = lhs->col;
      expr->node = BinaryExpr{op, std::move(lhs), std::move(rhs)};
      lhs = std::move(expr);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(TokenKind::Minus) || at(TokenKind::Bang)) {
      const Token& op_token = peek();
      const UnOp op = at(TokenKind::Minus) ? UnOp::Neg : UnOp::Not;
      advance();
      auto expr = make_expr(op_token);
      expr->node = UnaryExpr{op, parse_unary()};
      return expr;
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token& token = peek();
    switch (token.kind) {
      case TokenKind::IntLiteral: {
        auto expr = make_expr(token);
        expr->node = IntLit{token.int_value};
        advance();
        return expr;
      }
      case TokenKind::FloatLiteral: {
        auto expr = make_expr(token);
        expr->node = FloatLit{token.float_value};
        advance();
        return expr;
      }
      case TokenKind::KwTrue:
      case TokenKind::KwFalse: {
        auto expr = make_expr(token);
        expr->node = BoolLit{token.kind == TokenKind::KwTrue};
        advance();
        return expr;
      }
      case TokenKind::Identifier: {
        auto expr = make_expr(token);
        std::string name = advance().text;
        if (at(TokenKind::LParen)) {
          advance();
          CallExpr call;
          call.callee = std::move(name);
          if (!at(TokenKind::RParen)) {
            call.args.push_back(parse_expr());
            while (at(TokenKind::Comma)) {
              advance();
              call.args.push_back(parse_expr());
            }
          }
          expect(TokenKind::RParen, "\")\"");
          expr->node = std::move(call);
        } else {
          expr->node = VarRef{std::move(name)};
        }
        return expr;
      }
      case TokenKind::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(TokenKind::RParen, "\")\"");
        return inner;
      }
      default: fail(token, "expected expression");
    }
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
};

}  // namespace

SourceFile parse(std::string_view source, const std::string& file) {
  return Parser(lex(source, file), file).parse_file();
}

}  // namespace locus::minilang
