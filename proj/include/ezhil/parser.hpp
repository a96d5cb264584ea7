#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ezhil/ast.hpp"
#include "ezhil/token.hpp"

namespace ezhil {

/// Recursive-descent parser over a token list that ends in EOF. The first
/// error aborts with ParseError.
class Parser {
 public:
  explicit Parser(std::span<const Token> tokens);

  Program parse_program();
  Stmt parse_statement();
  Expr parse_expression();

  [[nodiscard]] bool at_end() const;
  [[nodiscard]] std::size_t position() const { return index_; }

 private:
  enum class BlockContext { TopLevel, Nested };

  const Token& peek(std::size_t ahead = 0) const;
  const Token& advance();
  bool check(TokenKind kind) const;
  bool match(TokenKind kind);
  const Token& expect(TokenKind kind, std::string_view what);
  [[noreturn]] void fail(std::string message, std::vector<TokenKind> expected = {}) const;

  bool at_separator() const;
  void skip_separators();
  void end_of_statement();
  bool at_block_terminator() const;
  bool elseif_ahead() const;

  Block parse_block();
  FuncDef parse_function();
  Stmt parse_conditional();
  Stmt parse_for();
  Stmt parse_do_until();
  Stmt parse_return();
  AssignStmt parse_assignment();
  Expr parse_condition_group();

  Expr parse_comparison();
  Expr parse_additive();
  Expr parse_multiplicative();
  Expr parse_unary();
  Expr parse_primary();
  std::vector<Expr> parse_expression_list(TokenKind close);

  std::span<const Token> tokens_;
  std::size_t index_ = 0;
};

Program parse(std::span<const Token> tokens);

/// tokenize + parse.
Program parse_source(std::string_view source);

}  // namespace ezhil
