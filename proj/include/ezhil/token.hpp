#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ezhil {

/// 1-based line and column; columns count grapheme clusters.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

std::ostream& operator<<(std::ostream& os, SourcePos pos);

enum class TokenKind : std::uint8_t {
  // Keywords
  If,
  ElseIf,
  Else,
  Select,
  Case,
  Otherwise,
  For,
  While,
  Do,
  Until,
  Break,
  Continue,
  Return,
  Print,
  Function,
  End,
  // Everything else
  Ident,
  Number,
  String,
  At,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semicolon,
  Newline,
  Assign,
  Plus,
  Minus,
  Star,
  Slash,
  Eq,
  Neq,
  Lt,
  Gt,
  Lte,
  Gte,
  Eof,
};

/// Upper-case name used by `--dump-tokens`, e.g. "IDENT" or "ELSEIF".
std::string_view token_kind_name(TokenKind kind);

bool is_keyword(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string lexeme;
  std::optional<double> number_value;
  std::optional<std::string> string_value;
  int line = 1;
  int column = 1;

  [[nodiscard]] SourcePos pos() const { return {line, column}; }
};

}  // namespace ezhil
