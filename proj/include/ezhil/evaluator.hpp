#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>

#include "ezhil/ast.hpp"
#include "ezhil/environment.hpp"
#include "ezhil/error.hpp"
#include "ezhil/value.hpp"

namespace ezhil {

/// Outcome of executing one statement.
struct ControlSignal {
  enum class Kind : std::uint8_t { Normal, Break, Continue, Return };

  Kind kind = Kind::Normal;
  Value value;        // Return only
  SourcePos origin;   // statement that raised the signal

  [[nodiscard]] bool normal() const { return kind == Kind::Normal; }
};

/// Receives the value of each top-level expression statement (REPL echo).
using ExpressionSink = std::function<void(const Value&)>;

/// Registers every top-level function, then executes the top-level
/// statements in order. Throws RuntimeError; `env` keeps every mutation made
/// before the failure.
void run_program(const Program& program, Environment& env, std::ostream& out,
                 const ExpressionSink& on_expression = {});

/// Registers the program's function definitions (hoisting).
void define_functions(const Program& program, Environment& env);

/// Break/continue/return signals are returned, not raised; the enclosing
/// loop, call or run_program decides whether they are legal.
ControlSignal exec_statement(const Stmt& stmt, Environment& env, std::ostream& out);

Value eval_expression(const Expr& expr, Environment& env, std::ostream& out);

/// Calls a user function or builtin. Arguments are bound to fresh copies.
Value call_function(const std::string& name, std::span<const Value> args, Environment& env, std::ostream& out,
                    SourcePos call_site = {});

/// Bool is itself, Number is true iff nonzero; anything else is a TypeMismatch.
bool truthiness(const Value& value, SourcePos pos = {});

}  // namespace ezhil
