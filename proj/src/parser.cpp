#include "ezhil/parser.hpp"

#include <algorithm>
#include <string>

#include "ezhil/error.hpp"
#include "ezhil/lexer.hpp"
#include "stack_guard.hpp"

namespace ezhil {
namespace {

std::string describe_token(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::Eof: return "end of input";
    case TokenKind::Newline: return "end of line";
    default: return std::string(token_kind_name(tok.kind)) + " '" + tok.lexeme + "'";
  }
}

std::string kw(TokenKind kind) { return std::string(keyword_spelling(kind)); }

std::optional<BinaryOp> comparison_op(TokenKind kind) {
  switch (kind) {
    case TokenKind::Eq: return BinaryOp::Eq;
    case TokenKind::Neq: return BinaryOp::Neq;
    case TokenKind::Lt: return BinaryOp::Lt;
    case TokenKind::Gt: return BinaryOp::Gt;
    case TokenKind::Lte: return BinaryOp::Lte;
    case TokenKind::Gte: return BinaryOp::Gte;
    default: return std::nullopt;
  }
}

}  // namespace

Parser::Parser(std::span<const Token> tokens) : tokens_(tokens) {
  if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
    throw ParseError("token list must end with EOF", {TokenKind::Eof}, Token{});
  }
}

const Token& Parser::peek(std::size_t ahead) const {
  return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
}

const Token& Parser::advance() {
  const Token& tok = tokens_[index_];
  if (index_ + 1 < tokens_.size()) ++index_;
  return tok;
}

bool Parser::at_end() const { return check(TokenKind::Eof); }
bool Parser::check(TokenKind kind) const { return peek().kind == kind; }

bool Parser::match(TokenKind kind) {
  if (!check(kind)) return false;
  advance();
  return true;
}

const Token& Parser::expect(TokenKind kind, std::string_view what) {
  if (!check(kind)) fail("expected " + std::string(what) + ", found " + describe_token(peek()), {kind});
  return advance();
}

void Parser::fail(std::string message, std::vector<TokenKind> expected) const {
  throw ParseError(std::move(message), std::move(expected), peek());
}

bool Parser::at_separator() const { return check(TokenKind::Newline) || check(TokenKind::Semicolon); }

void Parser::skip_separators() {
  while (at_separator()) advance();
}

void Parser::end_of_statement() {
  if (at_separator() || at_block_terminator()) return;
  fail("unexpected " + describe_token(peek()) + " after complete statement",
       {TokenKind::Newline, TokenKind::Semicolon});
}

bool Parser::at_block_terminator() const {
  switch (peek().kind) {
    case TokenKind::End:
    case TokenKind::Else:
    case TokenKind::Case:
    case TokenKind::Otherwise:
    case TokenKind::Until:
    case TokenKind::Eof: return true;
    case TokenKind::At: return elseif_ahead();
    default: return false;
  }
}

// True when the tokens ahead are `@( ... ) இல்லைஆனால்`.
bool Parser::elseif_ahead() const {
  if (peek().kind != TokenKind::At || peek(1).kind != TokenKind::LParen) return false;
  int depth = 0;
  for (std::size_t i = index_ + 1; i < tokens_.size(); ++i) {
    const TokenKind k = tokens_[i].kind;
    if (k == TokenKind::LParen) {
      ++depth;
    } else if (k == TokenKind::RParen) {
      if (--depth == 0) return i + 1 < tokens_.size() && tokens_[i + 1].kind == TokenKind::ElseIf;
    } else if (k == TokenKind::Newline || k == TokenKind::Semicolon || k == TokenKind::Eof) {
      return false;
    }
  }
  return false;
}

// ------------------------------------------------------------------ program

Program Parser::parse_program() {
  Program program;
  skip_separators();
  while (!at_end()) {
    if (check(TokenKind::Function)) {
      program.items.emplace_back(parse_function());
    } else {
      program.items.emplace_back(parse_statement());
    }
    end_of_statement();
    skip_separators();
  }
  return program;
}

Block Parser::parse_block() {
  if (!detail::stack_headroom()) fail("blocks nested too deeply");
  Block body;
  skip_separators();
  while (!at_block_terminator()) {
    if (check(TokenKind::Function)) fail(kw(TokenKind::Function) + " is only allowed at top level");
    body.push_back(parse_statement());
    end_of_statement();
    skip_separators();
  }
  return body;
}

FuncDef Parser::parse_function() {
  FuncDef def;
  def.pos = expect(TokenKind::Function, kw(TokenKind::Function)).pos();
  def.name = expect(TokenKind::Ident, "function name").lexeme;
  match(TokenKind::At);
  expect(TokenKind::LParen, "'(' before parameter list");
  if (!check(TokenKind::RParen)) {
    do {
      if (check(TokenKind::Ident) &&
          std::find(def.params.begin(), def.params.end(), peek().lexeme) != def.params.end()) {
        fail("duplicate parameter '" + peek().lexeme + "'");
      }
      def.params.push_back(expect(TokenKind::Ident, "parameter name").lexeme);
    } while (match(TokenKind::Comma));
  }
  expect(TokenKind::RParen, "')' after parameter list");
  def.body = parse_block();
  expect(TokenKind::End, kw(TokenKind::End) + " closing " + kw(TokenKind::Function) + " " + def.name);
  return def;
}

// ---------------------------------------------------------------- statements

Stmt Parser::parse_statement() {
  const Token& tok = peek();
  const SourcePos pos = tok.pos();
  switch (tok.kind) {
    case TokenKind::Print: {
      advance();
      return {PrintStmt{parse_expression()}, pos};
    }
    case TokenKind::Return: return parse_return();
    case TokenKind::Break: advance(); return {BreakStmt{}, pos};
    case TokenKind::Continue: advance(); return {ContinueStmt{}, pos};
    case TokenKind::At: return parse_conditional();
    case TokenKind::For: return parse_for();
    case TokenKind::Do: return parse_do_until();
    case TokenKind::Function: fail(kw(TokenKind::Function) + " is only allowed at top level");
    case TokenKind::If:
    case TokenKind::While:
    case TokenKind::Select:
      fail("missing @(...) condition before " + tok.lexeme, {TokenKind::At});
    case TokenKind::ElseIf:
    case TokenKind::Else: fail(tok.lexeme + " outside " + kw(TokenKind::If));
    case TokenKind::Case:
    case TokenKind::Otherwise: fail(tok.lexeme + " outside " + kw(TokenKind::Select));
    case TokenKind::End: fail(tok.lexeme + " without an open block");
    case TokenKind::Until: fail(tok.lexeme + " without matching " + kw(TokenKind::Do));
    case TokenKind::Eof: fail("expected statement, found end of input");
    default: break;
  }

  const bool starts_with_name = tok.kind == TokenKind::Ident;
  Expr expr = parse_expression();
  if (starts_with_name && check(TokenKind::Assign)) {
    LValue target;
    if (auto* name = std::get_if<NameExpr>(&expr.node)) {
      target.name = std::move(name->name);
    } else if (auto* index = std::get_if<IndexExpr>(&expr.node)) {
      target.name = std::move(index->base);
      target.index = std::move(*index->index);
    } else {
      fail("invalid assignment target");
    }
    advance();
    return {AssignStmt{std::move(target), parse_expression()}, pos};
  }
  return {ExprStmt{std::move(expr)}, pos};
}

Stmt Parser::parse_return() {
  const SourcePos pos = expect(TokenKind::Return, kw(TokenKind::Return)).pos();
  if (at_separator() || at_block_terminator()) return {ReturnStmt{}, pos};
  return {ReturnStmt{parse_expression()}, pos};
}

Expr Parser::parse_condition_group() {
  expect(TokenKind::At, "'@' before condition");
  expect(TokenKind::LParen, "'(' after '@'");
  Expr cond = parse_expression();
  expect(TokenKind::RParen, "')' closing condition");
  return cond;
}

Stmt Parser::parse_conditional() {
  const SourcePos pos = peek().pos();
  Expr cond = parse_condition_group();
  const Token& keyword = peek();

  switch (keyword.kind) {
    case TokenKind::If: {
      advance();
      IfStmt stmt;
      stmt.arms.push_back({std::move(cond), parse_block()});
      while (elseif_ahead()) {
        Expr arm_cond = parse_condition_group();
        expect(TokenKind::ElseIf, kw(TokenKind::ElseIf));
        stmt.arms.push_back({std::move(arm_cond), parse_block()});
      }
      if (match(TokenKind::Else)) stmt.else_body = parse_block();
      expect(TokenKind::End, kw(TokenKind::End) + " closing " + kw(TokenKind::If));
      return {std::move(stmt), pos};
    }
    case TokenKind::Select: {
      advance();
      SelectStmt stmt{std::move(cond), {}, std::nullopt};
      skip_separators();
      while (check(TokenKind::Case)) {
        advance();
        Expr match_expr = parse_condition_group();
        stmt.cases.push_back({std::move(match_expr), parse_block()});
      }
      if (match(TokenKind::Otherwise)) {
        stmt.otherwise = parse_block();
        if (check(TokenKind::Case)) {
          fail(kw(TokenKind::Case) + " after " + kw(TokenKind::Otherwise) + "; " + kw(TokenKind::Otherwise) +
               " must be last");
        }
      }
      if (!check(TokenKind::End)) {
        fail("expected " + kw(TokenKind::Case) + ", " + kw(TokenKind::Otherwise) + " or " + kw(TokenKind::End) +
                 ", found " + describe_token(peek()),
             {TokenKind::Case, TokenKind::Otherwise, TokenKind::End});
      }
      advance();
      return {std::move(stmt), pos};
    }
    case TokenKind::While: {
      advance();
      WhileStmt stmt{std::move(cond), parse_block()};
      expect(TokenKind::End, kw(TokenKind::End) + " closing " + kw(TokenKind::While));
      return {std::move(stmt), pos};
    }
    case TokenKind::ElseIf: fail(keyword.lexeme + " outside " + kw(TokenKind::If));
    default:
      fail("expected " + kw(TokenKind::If) + ", " + kw(TokenKind::Select) + " or " + kw(TokenKind::While) +
               " after condition, found " + describe_token(keyword),
           {TokenKind::If, TokenKind::Select, TokenKind::While});
  }
}

AssignStmt Parser::parse_assignment() {
  LValue target;
  target.name = expect(TokenKind::Ident, "assignment").lexeme;
  if (match(TokenKind::LBracket)) {
    target.index = parse_expression();
    expect(TokenKind::RBracket, "']'");
  }
  expect(TokenKind::Assign, "'='");
  return {std::move(target), parse_expression()};
}

Stmt Parser::parse_for() {
  const SourcePos pos = expect(TokenKind::For, kw(TokenKind::For)).pos();
  expect(TokenKind::LParen, "'(' after " + kw(TokenKind::For));
  AssignStmt init = parse_assignment();
  expect(TokenKind::Comma, "','");
  Expr cond = parse_expression();
  expect(TokenKind::Comma, "','");
  AssignStmt update = parse_assignment();
  expect(TokenKind::RParen, "')'");
  Block body = parse_block();
  expect(TokenKind::End, kw(TokenKind::End) + " closing " + kw(TokenKind::For));
  return {ForStmt{std::move(init), std::move(cond), std::move(update), std::move(body)}, pos};
}

Stmt Parser::parse_do_until() {
  const SourcePos pos = expect(TokenKind::Do, kw(TokenKind::Do)).pos();
  Block body = parse_block();
  expect(TokenKind::Until, kw(TokenKind::Until) + " closing " + kw(TokenKind::Do));
  return {DoUntilStmt{std::move(body), parse_condition_group()}, pos};
}

// --------------------------------------------------------------- expressions

Expr Parser::parse_expression() {
  if (!detail::stack_headroom()) fail("expression nested too deeply");
  return parse_comparison();
}

Expr Parser::parse_comparison() {
  Expr lhs = parse_additive();
  const auto op = comparison_op(peek().kind);
  if (!op) return lhs;
  const SourcePos pos = advance().pos();
  Expr rhs = parse_additive();
  if (comparison_op(peek().kind)) fail("comparisons cannot be chained");
  return {BinaryExpr{*op, std::move(lhs), std::move(rhs)}, pos};
}

Expr Parser::parse_additive() {
  Expr lhs = parse_multiplicative();
  while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
    const Token& op = advance();
    Expr rhs = parse_multiplicative();
    lhs = {BinaryExpr{op.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub, std::move(lhs), std::move(rhs)},
           op.pos()};
  }
  return lhs;
}

Expr Parser::parse_multiplicative() {
  Expr lhs = parse_unary();
  while (check(TokenKind::Star) || check(TokenKind::Slash)) {
    const Token& op = advance();
    Expr rhs = parse_unary();
    lhs = {BinaryExpr{op.kind == TokenKind::Star ? BinaryOp::Mul : BinaryOp::Div, std::move(lhs), std::move(rhs)},
           op.pos()};
  }
  return lhs;
}

Expr Parser::parse_unary() {
  if (check(TokenKind::Minus)) {
    if (!detail::stack_headroom()) fail("expression nested too deeply");
    const SourcePos pos = advance().pos();
    return {UnaryExpr{UnaryOp::Neg, parse_unary()}, pos};
  }
  return parse_primary();
}

std::vector<Expr> Parser::parse_expression_list(TokenKind close) {
  std::vector<Expr> items;
  if (check(close)) return items;
  do {
    items.push_back(parse_expression());
  } while (match(TokenKind::Comma));
  return items;
}

Expr Parser::parse_primary() {
  const Token& tok = peek();
  const SourcePos pos = tok.pos();
  switch (tok.kind) {
    case TokenKind::Number: advance(); return {NumberLit{*tok.number_value}, pos};
    case TokenKind::String: advance(); return {StringLit{*tok.string_value}, pos};
    case TokenKind::LParen: {
      advance();
      if (check(TokenKind::RParen)) fail("empty parentheses in expression");
      Expr inner = parse_expression();
      expect(TokenKind::RParen, "')'");
      inner.pos = pos;
      return inner;
    }
    case TokenKind::LBracket: {
      advance();
      ArrayLit array{parse_expression_list(TokenKind::RBracket)};
      expect(TokenKind::RBracket, "']' closing array literal");
      return {std::move(array), pos};
    }
    case TokenKind::Ident: {
      std::string name = advance().lexeme;
      if (match(TokenKind::LBracket)) {
        Expr index = parse_expression();
        expect(TokenKind::RBracket, "']' closing subscript");
        return {IndexExpr{std::move(name), std::move(index)}, pos};
      }
      if (match(TokenKind::LParen)) {
        auto args = parse_expression_list(TokenKind::RParen);
        expect(TokenKind::RParen, "')' closing argument list");
        return {CallExpr{std::move(name), std::move(args)}, pos};
      }
      return {NameExpr{std::move(name)}, pos};
    }
    default:
      fail("expected expression, found " + describe_token(tok),
           {TokenKind::Number, TokenKind::String, TokenKind::Ident, TokenKind::LParen, TokenKind::LBracket,
            TokenKind::Minus});
  }
}

Program parse(std::span<const Token> tokens) { return Parser(tokens).parse_program(); }

Program parse_source(std::string_view source) {
  const auto tokens = tokenize(source);
  return parse(tokens);
}

}  // namespace ezhil
