#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ezhil/token.hpp"

namespace ezhil {

/// Heap slot with value semantics: copying a Box copies the pointee.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

enum class UnaryOp : std::uint8_t { Neg };

enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Eq, Neq, Lt, Gt, Lte, Gte };

std::string_view binary_op_symbol(BinaryOp op);
bool is_comparison(BinaryOp op);

// ---------------------------------------------------------------- expressions

struct Expr;

struct NumberLit {
  double value = 0.0;
};
struct StringLit {
  std::string value;
};
struct ArrayLit {
  std::vector<Expr> elements;
};
struct NameExpr {
  std::string name;
};
/// `base[index]`; the base is always a plain identifier.
struct IndexExpr {
  std::string base;
  Box<Expr> index;
};
struct CallExpr {
  std::string callee;
  std::vector<Expr> args;
};
struct UnaryExpr {
  UnaryOp op = UnaryOp::Neg;
  Box<Expr> operand;
};
struct BinaryExpr {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
};

struct Expr {
  using Node =
      std::variant<NumberLit, StringLit, ArrayLit, NameExpr, IndexExpr, CallExpr, UnaryExpr, BinaryExpr>;
  Node node;
  SourcePos pos;
};

// ----------------------------------------------------------------- statements

struct Stmt;
using Block = std::vector<Stmt>;

/// Assignment target: a name, or a single subscript of a name.
struct LValue {
  std::string name;
  std::optional<Expr> index;
};

struct AssignStmt {
  LValue target;
  Expr value;
};
struct PrintStmt {
  Expr value;
};
struct ReturnStmt {
  std::optional<Expr> value;
};
struct BreakStmt {};
struct ContinueStmt {};
struct ExprStmt {
  Expr value;
};
struct IfArm {
  Expr cond;
  Block body;
};
struct IfStmt {
  std::vector<IfArm> arms;  // nonempty; arms[0] is the ஆனால் arm
  std::optional<Block> else_body;
};
struct CaseArm {
  Expr match;
  Block body;
};
struct SelectStmt {
  Expr selector;
  std::vector<CaseArm> cases;
  std::optional<Block> otherwise;
};
struct ForStmt {
  AssignStmt init;
  Expr cond;
  AssignStmt update;
  Block body;
};
struct WhileStmt {
  Expr cond;
  Block body;
};
struct DoUntilStmt {
  Block body;
  Expr cond;
};

struct Stmt {
  using Node = std::variant<AssignStmt, PrintStmt, ReturnStmt, BreakStmt, ContinueStmt, ExprStmt,
                            IfStmt, SelectStmt, ForStmt, WhileStmt, DoUntilStmt>;
  Node node;
  SourcePos pos;
};

struct FuncDef {
  std::string name;
  std::vector<std::string> params;
  Block body;
  SourcePos pos;
};

struct Program {
  std::vector<std::variant<Stmt, FuncDef>> items;
};

// ------------------------------------------------------------------ traversal

/// Dispatches on the node tag. The visitor must accept every alternative,
/// so a missing callback is a compile error.
template <typename Visitor>
decltype(auto) visit(Visitor&& visitor, const Expr& expr) {
  return std::visit(std::forward<Visitor>(visitor), expr.node);
}

template <typename Visitor>
decltype(auto) visit(Visitor&& visitor, const Stmt& stmt) {
  return std::visit(std::forward<Visitor>(visitor), stmt.node);
}

// ------------------------------------------------------------------ utilities

/// Structural equality ignoring source positions. Number literals compare by
/// exact value.
bool node_equal(const Expr& a, const Expr& b);
bool node_equal(const Stmt& a, const Stmt& b);
bool node_equal(const FuncDef& a, const FuncDef& b);
bool node_equal(const Program& a, const Program& b);

/// Canonical concrete syntax: one statement per line, two-space indentation,
/// conditions as `@(...)`, parentheses only where precedence needs them.
/// The output re-parses to a node_equal tree (number literals must be finite
/// and non-negative; negation is a UnaryExpr).
std::string format_ast(const Program& program);
std::string format_ast(const Stmt& stmt);
std::string format_ast(const Expr& expr);

/// Shortest decimal that round-trips, without exponent; integral values have
/// no decimal point.
std::string format_number(double value);

}  // namespace ezhil
