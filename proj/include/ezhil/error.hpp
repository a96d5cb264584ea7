#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ezhil/token.hpp"

namespace ezhil {

/// Base for every diagnostic the interpreter raises. what() is the bare
/// message; describe() prefixes the position.
class Error : public std::runtime_error {
 public:
  Error(std::string message, SourcePos pos)
      : std::runtime_error(std::move(message)), pos_(pos) {}

  [[nodiscard]] SourcePos pos() const { return pos_; }
  [[nodiscard]] virtual std::string describe() const;

 private:
  SourcePos pos_;
};

class LexError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] std::string describe() const override;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::vector<TokenKind> expected, Token found)
      : Error(std::move(message), found.pos()),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  [[nodiscard]] const std::vector<TokenKind>& expected() const { return expected_; }
  [[nodiscard]] const Token& found() const { return found_; }
  [[nodiscard]] std::string describe() const override;

 private:
  std::vector<TokenKind> expected_;
  Token found_;
};

enum class RuntimeErrorKind : std::uint8_t {
  TypeMismatch,
  Unbound,
  ArityMismatch,
  IndexOutOfRange,
  NonIntegerIndex,
  DivisionByZero,
  BreakOutsideLoop,
  ContinueOutsideLoop,
  ReturnOutsideFunction,
  StackOverflow,
  Redefinition,
};

std::string_view runtime_error_kind_name(RuntimeErrorKind kind);

class RuntimeError : public Error {
 public:
  RuntimeError(RuntimeErrorKind kind, std::string message, SourcePos pos)
      : Error(std::move(message), pos), kind_(kind) {}

  [[nodiscard]] RuntimeErrorKind kind() const { return kind_; }
  [[nodiscard]] std::string describe() const override;

 private:
  RuntimeErrorKind kind_;
};

}  // namespace ezhil
