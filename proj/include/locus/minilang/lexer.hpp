#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace locus::minilang {

enum class TokenKind {
  // literals and names
  Identifier,
  IntLiteral,
  FloatLiteral,
  // keywords
  KwFn,
  KwLet,
  KwIf,
  KwElse,
  KwWhile,
  KwReturn,
  KwAssert,
  KwTrue,
  KwFalse,
  KwAnd,
  KwOr,
  // punctuation and operators
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Plus,
  Minus,
  Star,
  Slash,
  Bang,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  Assign,
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;
  long long int_value = 0;
  double float_value = 0.0;
  int line = 1;
  int col = 1;
};

// Tokenizes one source file. `#` starts a comment running to end of line.
// Throws ParseFailure on malformed input (bad characters, bad numbers).
std::vector<Token> lex(std::string_view source, const std::string& file);

}  // namespace locus::minilang
