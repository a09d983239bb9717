#include "locus/minilang/lexer.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_map>

#include "locus/errors.hpp"

namespace locus::minilang {

namespace {

const std::unordered_map<std::string, TokenKind>& keywords() {
  static const std::unordered_map<std::string, TokenKind> table = {
      {"fn", TokenKind::KwFn},         {"let", TokenKind::KwLet},
      {"if", TokenKind::KwIf},         {"else", TokenKind::KwElse},
      {"while", TokenKind::KwWhile},   {"return", TokenKind::KwReturn},
      {"assert", TokenKind::KwAssert}, {"true", TokenKind::KwTrue},
      {"false", TokenKind::KwFalse},   {"and", TokenKind::KwAnd},
      {"or", TokenKind::KwOr},
  };
  return table;
}

[[noreturn]] void fail(const std::string& file, int line, int col,
                       const std::string& message) {
  raise(ErrorCode::ParseFailure, file + ":" + std::to_string(line) + ":" +
                                     std::to_string(col) + ": " + message);
}

}  // namespace

std::vector<Token> lex(std::string_view source, const std::string& file) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  auto advance = [&]() {
    if (source[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  auto peek = [&](std::size_t offset = 0) -> char {
    return pos + offset < source.size() ? source[pos + offset] : '\0';
  };
  auto push = [&](TokenKind kind, std::string text, int tok_line,
                  int tok_col) {
    Token token;
    token.kind = kind;
    token.text = std::move(text);
    token.line = tok_line;
    token.col = tok_col;
    tokens.push_back(std::move(token));
  };

  while (pos < source.size()) {
    const char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '#') {
      while (pos < source.size() && peek() != '\n') advance();
      continue;
    }

    const int tok_line = line;
    const int tok_col = col;

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos < source.size() &&
             (std::isalnum(static_cast<unsigned char>(peek())) ||
              peek() == '_')) {
        word.push_back(peek());
        advance();
      }
      auto it = keywords().find(word);
      push(it != keywords().end() ? it->second : TokenKind::Identifier,
           std::move(word), tok_line, tok_col);
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string number;
      bool is_float = false;
      while (pos < source.size() &&
             std::isdigit(static_cast<unsigned char>(peek()))) {
        number.push_back(peek());
        advance();
      }
      if (peek() == '.' &&
          std::isdigit(static_cast<unsigned char>(peek(1)))) {
        is_float = true;
        number.push_back('.');
        advance();
        while (pos < source.size() &&
               std::isdigit(static_cast<unsigned char>(peek()))) {
          number.push_back(peek());
          advance();
        }
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t look = 1;
        if (peek(1) == '+' || peek(1) == '-') look = 2;
        if (std::isdigit(static_cast<unsigned char>(peek(look)))) {
          is_float = true;
          for (std::size_t i = 0; i < look; ++i) {
            number.push_back(peek());
            advance();
          }
          while (pos < source.size() &&
                 std::isdigit(static_cast<unsigned char>(peek()))) {
            number.push_back(peek());
            advance();
          }
        }
      }
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
        fail(file, tok_line, tok_col, "malformed number \"" + number + "\"");
      Token token;
      token.text = number;
      token.line = tok_line;
      token.col = tok_col;
      if (is_float) {
        token.kind = TokenKind::FloatLiteral;
        token.float_value = std::strtod(number.c_str(), nullptr);
      } else {
        token.kind = TokenKind::IntLiteral;
        token.int_value = std::strtoll(number.c_str(), nullptr, 10);
      }
      tokens.push_back(std::move(token));
      continue;
    }

    auto two = [&](char second) { return peek(1) == second; };
    switch (c) {
      case '(': push(TokenKind::LParen, "(", tok_line, tok_col); advance(); break;
      case ')': push(TokenKind::RParen, ")", tok_line, tok_col); advance(); break;
      case '{': push(TokenKind::LBrace, "{", tok_line, tok_col); advance(); break;
      case '}': push(TokenKind::RBrace, "}", tok_line, tok_col); advance(); break;
      case ',': push(TokenKind::Comma, ",", tok_line, tok_col); advance(); break;
      case ';': push(TokenKind::Semicolon, ";", tok_line, tok_col); advance(); break;
      case '+': push(TokenKind::Plus, "+", tok_line, tok_col); advance(); break;
      case '-': push(TokenKind::Minus, "-", tok_line, tok_col); advance(); break;
      case '*': push(TokenKind::Star, "*", tok_line, tok_col); advance(); break;
      case '/': push(TokenKind::Slash, "/", tok_line, tok_col); advance(); break;
      case '=':
        if (two('=')) {
          push(TokenKind::EqEq, "==", tok_line, tok_col);
          advance();
          advance();
        } else {
          push(TokenKind::Assign, "=", tok_line, tok_col);
          advance();
        }
        break;
      case '!':
        if (two('=')) {
          push(TokenKind::NotEq, "!=", tok_line, tok_col);
          advance();
          advance();
        } else {
          push(TokenKind::Bang, "!", tok_line, tok_col);
          advance();
        }
        break;
      case '<':
        if (two('=')) {
          push(TokenKind::Le, "<=", tok_line, tok_col);
          advance();
          advance();
        } else {
          push(TokenKind::Lt, "<", tok_line, tok_col);
          advance();
        }
        break;
      case '>':
        if (two('=')) {
          push(TokenKind::Ge, ">=", tok_line, tok_col);
          advance();
          advance();
        } else {
          push(TokenKind::Gt, ">", tok_line, tok_col);
          advance();
        }
        break;
      default:
        fail(file, tok_line, tok_col,
             std::string("unexpected character \"") + c + "\"");
    }
  }

  Token eof;
  eof.kind = TokenKind::EndOfFile;
  eof.line = line;
  eof.col = col;
  tokens.push_back(std::move(eof));
  return tokens;
}

}  // namespace locus::minilang
