#include "ezhil/token.hpp"

namespace ezhil {

std::ostream& operator<<(std::ostream& os, SourcePos pos) {
  return os << pos.line << ':' << pos.column;
}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::If: return "IF";
    case TokenKind::ElseIf: return "ELSEIF";
    case TokenKind::Else: return "ELSE";
    case TokenKind::Select: return "SELECT";
    case TokenKind::Case: return "CASE";
    case TokenKind::Otherwise: return "OTHERWISE";
    case TokenKind::For: return "FOR";
    case TokenKind::While: return "WHILE";
    case TokenKind::Do: return "DO";
    case TokenKind::Until: return "UNTIL";
    case TokenKind::Break: return "BREAK";
    case TokenKind::Continue: return "CONTINUE";
    case TokenKind::Return: return "RETURN";
    case TokenKind::Print: return "PRINT";
    case TokenKind::Function: return "FUNCTION";
    case TokenKind::End: return "END";
    case TokenKind::Ident: return "IDENT";
    case TokenKind::Number: return "NUMBER";
    case TokenKind::String: return "STRING";
    case TokenKind::At: return "AT";
    case TokenKind::LParen: return "LPAREN";
    case TokenKind::RParen: return "RPAREN";
    case TokenKind::LBracket: return "LBRACKET";
    case TokenKind::RBracket: return "RBRACKET";
    case TokenKind::Comma: return "COMMA";
    case TokenKind::Semicolon: return "SEMICOLON";
    case TokenKind::Newline: return "NEWLINE";
    case TokenKind::Assign: return "ASSIGN";
    case TokenKind::Plus: return "PLUS";
    case TokenKind::Minus: return "MINUS";
    case TokenKind::Star: return "STAR";
    case TokenKind::Slash: return "SLASH";
    case TokenKind::Eq: return "EQ";
    case TokenKind::Neq: return "NEQ";
    case TokenKind::Lt: return "LT";
    case TokenKind::Gt: return "GT";
    case TokenKind::Lte: return "LTE";
    case TokenKind::Gte: return "GTE";
    case TokenKind::Eof: return "EOF";
  }
  return "?";
}

bool is_keyword(TokenKind kind) { return kind <= TokenKind::End; }

}  // namespace ezhil
