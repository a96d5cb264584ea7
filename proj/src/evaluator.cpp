#include "ezhil/evaluator.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "ezhil/unicode.hpp"
#include "stack_guard.hpp"

namespace ezhil {
namespace {

[[noreturn]] void raise(RuntimeErrorKind kind, std::string message, SourcePos pos) {
  throw RuntimeError(kind, std::move(message), pos);
}

std::string type_name(const Value& v) { return std::string(kind_name(v.kind())); }

std::size_t checked_index(const Value& index, std::size_t size, SourcePos pos) {
  if (!index.is_number()) raise(RuntimeErrorKind::TypeMismatch, "array index must be a number, got " + type_name(index), pos);
  const double i = index.as_number();
  if (std::trunc(i) != i) raise(RuntimeErrorKind::NonIntegerIndex, "array index " + render_value(index) + " is not an integer", pos);
  if (i < 0 || i >= static_cast<double>(size)) {
    raise(RuntimeErrorKind::IndexOutOfRange,
          "index " + render_value(index) + " out of range for array of length " + std::to_string(size), pos);
  }
  return static_cast<std::size_t>(i);
}

class FrameGuard {
 public:
  FrameGuard(Environment& env, Frame frame) : env_(env) { env_.push_frame(std::move(frame)); }
  FrameGuard(const FrameGuard&) = delete;
  FrameGuard& operator=(const FrameGuard&) = delete;
  ~FrameGuard() { env_.pop_frame(); }

 private:
  Environment& env_;
};

class Evaluator {
 public:
  Evaluator(Environment& env, std::ostream& out) : env_(env), out_(out) {}

  // -------------------------------------------------------------- statements

  ControlSignal exec(const Stmt& stmt) {
    return visit([&](const auto& node) { return exec_node(node, stmt.pos); }, stmt);
  }

  ControlSignal exec_block(const Block& block) {
    for (const auto& stmt : block) {
      ControlSignal signal = exec(stmt);
      if (!signal.normal()) return signal;
    }
    return {};
  }

  ControlSignal exec_node(const AssignStmt& s, SourcePos pos) {
    assign(s, pos);
    return {};
  }

  ControlSignal exec_node(const PrintStmt& s, SourcePos) {
    out_ << render_value(eval(s.value)) << '\n';
    return {};
  }

  ControlSignal exec_node(const ReturnStmt& s, SourcePos pos) {
    return {ControlSignal::Kind::Return, s.value ? eval(*s.value) : Value{}, pos};
  }

  ControlSignal exec_node(const BreakStmt&, SourcePos pos) { return {ControlSignal::Kind::Break, {}, pos}; }
  ControlSignal exec_node(const ContinueStmt&, SourcePos pos) { return {ControlSignal::Kind::Continue, {}, pos}; }

  ControlSignal exec_node(const ExprStmt& s, SourcePos) {
    eval(s.value);
    return {};
  }

  ControlSignal exec_node(const IfStmt& s, SourcePos) {
    for (const auto& arm : s.arms) {
      if (test(arm.cond)) return exec_block(arm.body);
    }
    if (s.else_body) return exec_block(*s.else_body);
    return {};
  }

  ControlSignal exec_node(const SelectStmt& s, SourcePos) {
    const Value selector = eval(s.selector);
    for (const auto& c : s.cases) {
      if (value_equal(selector, eval(c.match))) return exec_block(c.body);
    }
    if (s.otherwise) return exec_block(*s.otherwise);
    return {};
  }

  ControlSignal exec_node(const WhileStmt& s, SourcePos) {
    while (test(s.cond)) {
      ControlSignal signal = exec_block(s.body);
      if (signal.kind == ControlSignal::Kind::Break) break;
      if (signal.kind == ControlSignal::Kind::Return) return signal;
    }
    return {};
  }

  ControlSignal exec_node(const DoUntilStmt& s, SourcePos) {
    do {
      ControlSignal signal = exec_block(s.body);
      if (signal.kind == ControlSignal::Kind::Break) break;
      if (signal.kind == ControlSignal::Kind::Return) return signal;
    } while (!test(s.cond));
    return {};
  }

  ControlSignal exec_node(const ForStmt& s, SourcePos pos) {
    assign(s.init, pos);
    while (test(s.cond)) {
      ControlSignal signal = exec_block(s.body);
      if (signal.kind == ControlSignal::Kind::Break) break;
      if (signal.kind == ControlSignal::Kind::Return) return signal;
      assign(s.update, pos);
    }
    return {};
  }

  void assign(const AssignStmt& s, SourcePos pos) {
    if (!s.target.index) {
      env_.assign(s.target.name, eval(s.value));
      return;
    }
    const Value index = eval(*s.target.index);
    Value value = eval(s.value);
    Value* base = env_.lookup(s.target.name);
    if (!base) raise(RuntimeErrorKind::Unbound, "unbound name '" + s.target.name + "'", pos);
    if (!base->is_array()) {
      raise(RuntimeErrorKind::TypeMismatch, "'" + s.target.name + "' is a " + type_name(*base) + ", not an array", pos);
    }
    auto& elements = base->as_array();
    elements[checked_index(index, elements.size(), s.target.index->pos)] = std::move(value);
  }

  bool test(const Expr& cond) { return truthiness(eval(cond), cond.pos); }

  // ------------------------------------------------------------- expressions

  Value eval(const Expr& expr) {
    if (!detail::stack_headroom()) raise(RuntimeErrorKind::StackOverflow, "native stack exhausted", expr.pos);
    return visit([&](const auto& node) { return eval_node(node, expr.pos); }, expr);
  }

  Value eval_node(const NumberLit& e, SourcePos) { return e.value; }
  Value eval_node(const StringLit& e, SourcePos) { return e.value; }

  Value eval_node(const ArrayLit& e, SourcePos) {
    Value::Array elements;
    elements.reserve(e.elements.size());
    for (const auto& element : e.elements) elements.push_back(eval(element));
    return elements;
  }

  Value eval_node(const NameExpr& e, SourcePos pos) { return resolve(e.name, pos); }

  Value eval_node(const IndexExpr& e, SourcePos pos) {
    const Value index = eval(*e.index);
    const Value& base = resolve(e.base, pos);
    if (!base.is_array()) raise(RuntimeErrorKind::TypeMismatch, "'" + e.base + "' is a " + type_name(base) + ", not an array", pos);
    const auto& elements = base.as_array();
    return elements[checked_index(index, elements.size(), e.index->pos)];
  }

  Value eval_node(const CallExpr& e, SourcePos pos) {
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& arg : e.args) args.push_back(eval(arg));
    return call(e.callee, args, pos);
  }

  Value eval_node(const UnaryExpr& e, SourcePos pos) {
    const Value operand = eval(*e.operand);
    if (!operand.is_number()) raise(RuntimeErrorKind::TypeMismatch, "cannot negate a " + type_name(operand), pos);
    return -operand.as_number();
  }

  Value eval_node(const BinaryExpr& e, SourcePos pos) {
    const Value lhs = eval(*e.lhs);
    const Value rhs = eval(*e.rhs);
    switch (e.op) {
      case BinaryOp::Eq: return value_equal(lhs, rhs);
      case BinaryOp::Neq: return !value_equal(lhs, rhs);
      case BinaryOp::Lt:
      case BinaryOp::Gt:
      case BinaryOp::Lte:
      case BinaryOp::Gte: return compare(e.op, lhs, rhs, pos);
      case BinaryOp::Add:
        if (lhs.is_str() && rhs.is_str()) return lhs.as_str() + rhs.as_str();
        [[fallthrough]];
      default: break;
    }
    if (!lhs.is_number() || !rhs.is_number()) {
      raise(RuntimeErrorKind::TypeMismatch,
            "operator " + std::string(binary_op_symbol(e.op)) + " cannot combine " + type_name(lhs) + " and " +
                type_name(rhs),
            pos);
    }
    const double a = lhs.as_number();
    const double b = rhs.as_number();
    switch (e.op) {
      case BinaryOp::Add: return a + b;
      case BinaryOp::Sub: return a - b;
      case BinaryOp::Mul: return a * b;
      case BinaryOp::Div:
        if (b == 0) raise(RuntimeErrorKind::DivisionByZero, "division by zero", pos);
        return a / b;
      default: return Value{};
    }
  }

  static Value compare(BinaryOp op, const Value& lhs, const Value& rhs, SourcePos pos) {
    std::partial_ordering order = std::partial_ordering::unordered;
    if (lhs.is_number() && rhs.is_number()) {
      order = lhs.as_number() <=> rhs.as_number();
    } else if (lhs.is_str() && rhs.is_str()) {
      order = unicode::compare_graphemes(lhs.as_str(), rhs.as_str());
    } else {
      raise(RuntimeErrorKind::TypeMismatch,
            "operator " + std::string(binary_op_symbol(op)) + " cannot compare " + type_name(lhs) + " and " +
                type_name(rhs),
            pos);
    }
    switch (op) {
      case BinaryOp::Lt: return order < 0;
      case BinaryOp::Gt: return order > 0;
      case BinaryOp::Lte: return order <= 0;
      default: return order >= 0;
    }
  }

  const Value& resolve(const std::string& name, SourcePos pos) const {
    const Value* v = env_.lookup(name);
    if (!v) raise(RuntimeErrorKind::Unbound, "unbound name '" + name + "'", pos);
    return *v;
  }

  // ------------------------------------------------------------------- calls

  Value call(const std::string& name, std::span<const Value> args, SourcePos pos) {
    if (const FuncDef* def = env_.find_function(name)) return call_user(*def, args, pos);
    if (const Builtin* builtin = env_.find_builtin(name)) {
      try {
        return invoke_builtin(*builtin, args);
      } catch (const BuiltinFailure& failure) {
        raise(failure.kind, failure.message, pos);
      }
    }
    raise(RuntimeErrorKind::Unbound, "unbound function '" + name + "'", pos);
  }

  Value call_user(const FuncDef& def, std::span<const Value> args, SourcePos pos) {
    if (args.size() != def.params.size()) {
      raise(RuntimeErrorKind::ArityMismatch,
            def.name + " expects " + std::to_string(def.params.size()) + " argument(s), got " +
                std::to_string(args.size()),
            pos);
    }
    if (env_.depth() >= env_.max_depth()) {
      raise(RuntimeErrorKind::StackOverflow,
            "recursion depth limit of " + std::to_string(env_.max_depth()) + " exceeded calling " + def.name, pos);
    }
    if (!detail::stack_headroom()) {
      raise(RuntimeErrorKind::StackOverflow, "native stack exhausted calling " + def.name, pos);
    }
    Frame frame{def.name, {}};
    for (std::size_t i = 0; i < args.size(); ++i) frame.locals.emplace(def.params[i], deep_copy(args[i]));
    FrameGuard guard(env_, std::move(frame));

    ControlSignal signal = exec_block(def.body);
    switch (signal.kind) {
      case ControlSignal::Kind::Return: return std::move(signal.value);
      case ControlSignal::Kind::Break:
        raise(RuntimeErrorKind::BreakOutsideLoop, "break outside a loop", signal.origin);
      case ControlSignal::Kind::Continue:
        raise(RuntimeErrorKind::ContinueOutsideLoop, "continue outside a loop", signal.origin);
      case ControlSignal::Kind::Normal: break;
    }
    return {};
  }

 private:
  Environment& env_;
  std::ostream& out_;
};

}  // namespace

bool truthiness(const Value& value, SourcePos pos) {
  if (value.is_bool()) return value.as_bool();
  if (value.is_number()) return value.as_number() != 0;
  raise(RuntimeErrorKind::TypeMismatch, "condition must be a number or boolean, got " + type_name(value), pos);
}

void define_functions(const Program& program, Environment& env) {
  for (const auto& item : program.items) {
    const auto* def = std::get_if<FuncDef>(&item);
    if (!def) continue;
    if (!env.define_function(std::make_shared<const FuncDef>(*def))) {
      raise(RuntimeErrorKind::Redefinition, "'" + def->name + "' is a builtin and cannot be redefined", def->pos);
    }
  }
}

void run_program(const Program& program, Environment& env, std::ostream& out, const ExpressionSink& on_expression) {
  define_functions(program, env);
  Evaluator evaluator(env, out);
  for (const auto& item : program.items) {
    const auto* stmt = std::get_if<Stmt>(&item);
    if (!stmt) continue;
    if (on_expression) {
      if (const auto* expr = std::get_if<ExprStmt>(&stmt->node)) {
        on_expression(evaluator.eval(expr->value));
        continue;
      }
    }
    const ControlSignal signal = evaluator.exec(*stmt);
    switch (signal.kind) {
      case ControlSignal::Kind::Normal: break;
      case ControlSignal::Kind::Break: raise(RuntimeErrorKind::BreakOutsideLoop, "break outside a loop", signal.origin);
      case ControlSignal::Kind::Continue:
        raise(RuntimeErrorKind::ContinueOutsideLoop, "continue outside a loop", signal.origin);
      case ControlSignal::Kind::Return:
        raise(RuntimeErrorKind::ReturnOutsideFunction, "return outside a function", signal.origin);
    }
  }
}

ControlSignal exec_statement(const Stmt& stmt, Environment& env, std::ostream& out) {
  return Evaluator(env, out).exec(stmt);
}

Value eval_expression(const Expr& expr, Environment& env, std::ostream& out) { return Evaluator(env, out).eval(expr); }

Value call_function(const std::string& name, std::span<const Value> args, Environment& env, std::ostream& out,
                    SourcePos call_site) {
  return Evaluator(env, out).call(name, args, call_site);
}

}  // namespace ezhil
