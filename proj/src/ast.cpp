#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "ezhil/ast.hpp"
#include "ezhil/lexer.hpp"

namespace ezhil {

std::string_view binary_op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Neq: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Lte: return "<=";
    case BinaryOp::Gte: return ">=";
  }
  return "?";
}

bool is_comparison(BinaryOp op) { return op >= BinaryOp::Eq; }

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 512> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  if (ec != std::errc{}) return "nan";
  return {buf.data(), end};
}

// ------------------------------------------------------------------ equality

namespace {

bool blocks_equal(const Block& a, const Block& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Stmt& x, const Stmt& y) { return node_equal(x, y); });
}

bool exprs_equal(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Expr& x, const Expr& y) { return node_equal(x, y); });
}

template <typename T, typename Eq>
bool optionals_equal(const std::optional<T>& a, const std::optional<T>& b, Eq eq) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

bool lvalues_equal(const LValue& a, const LValue& b) {
  return a.name == b.name &&
         optionals_equal(a.index, b.index, [](const Expr& x, const Expr& y) { return node_equal(x, y); });
}

bool assigns_equal(const AssignStmt& a, const AssignStmt& b) {
  return lvalues_equal(a.target, b.target) && node_equal(a.value, b.value);
}

}  // namespace

bool node_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const NumberLit& x) { return x.value == std::get<NumberLit>(b.node).value; },
          [&](const StringLit& x) { return x.value == std::get<StringLit>(b.node).value; },
          [&](const ArrayLit& x) { return exprs_equal(x.elements, std::get<ArrayLit>(b.node).elements); },
          [&](const NameExpr& x) { return x.name == std::get<NameExpr>(b.node).name; },
          [&](const IndexExpr& x) {
            const auto& y = std::get<IndexExpr>(b.node);
            return x.base == y.base && node_equal(*x.index, *y.index);
          },
          [&](const CallExpr& x) {
            const auto& y = std::get<CallExpr>(b.node);
            return x.callee == y.callee && exprs_equal(x.args, y.args);
          },
          [&](const UnaryExpr& x) {
            const auto& y = std::get<UnaryExpr>(b.node);
            return x.op == y.op && node_equal(*x.operand, *y.operand);
          },
          [&](const BinaryExpr& x) {
            const auto& y = std::get<BinaryExpr>(b.node);
            return x.op == y.op && node_equal(*x.lhs, *y.lhs) && node_equal(*x.rhs, *y.rhs);
          },
      },
      a.node);
}

bool node_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  const auto expr_eq = [](const Expr& x, const Expr& y) { return node_equal(x, y); };
  return std::visit(
      Overloaded{
          [&](const AssignStmt& x) { return assigns_equal(x, std::get<AssignStmt>(b.node)); },
          [&](const PrintStmt& x) { return node_equal(x.value, std::get<PrintStmt>(b.node).value); },
          [&](const ReturnStmt& x) {
            return optionals_equal(x.value, std::get<ReturnStmt>(b.node).value, expr_eq);
          },
          [&](const BreakStmt&) { return true; },
          [&](const ContinueStmt&) { return true; },
          [&](const ExprStmt& x) { return node_equal(x.value, std::get<ExprStmt>(b.node).value); },
          [&](const IfStmt& x) {
            const auto& y = std::get<IfStmt>(b.node);
            return std::equal(x.arms.begin(), x.arms.end(), y.arms.begin(), y.arms.end(),
                              [](const IfArm& p, const IfArm& q) {
                                return node_equal(p.cond, q.cond) && blocks_equal(p.body, q.body);
                              }) &&
                   optionals_equal(x.else_body, y.else_body, blocks_equal);
          },
          [&](const SelectStmt& x) {
            const auto& y = std::get<SelectStmt>(b.node);
            return node_equal(x.selector, y.selector) &&
                   std::equal(x.cases.begin(), x.cases.end(), y.cases.begin(), y.cases.end(),
                              [](const CaseArm& p, const CaseArm& q) {
                                return node_equal(p.match, q.match) && blocks_equal(p.body, q.body);
                              }) &&
                   optionals_equal(x.otherwise, y.otherwise, blocks_equal);
          },
          [&](const ForStmt& x) {
            const auto& y = std::get<ForStmt>(b.node);
            return assigns_equal(x.init, y.init) && node_equal(x.cond, y.cond) &&
                   assigns_equal(x.update, y.update) && blocks_equal(x.body, y.body);
          },
          [&](const WhileStmt& x) {
            const auto& y = std::get<WhileStmt>(b.node);
            return node_equal(x.cond, y.cond) && blocks_equal(x.body, y.body);
          },
          [&](const DoUntilStmt& x) {
            const auto& y = std::get<DoUntilStmt>(b.node);
            return blocks_equal(x.body, y.body) && node_equal(x.cond, y.cond);
          },
      },
      a.node);
}

bool node_equal(const FuncDef& a, const FuncDef& b) {
  return a.name == b.name && a.params == b.params && blocks_equal(a.body, b.body);
}

bool node_equal(const Program& a, const Program& b) {
  return std::equal(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                    [](const auto& x, const auto& y) {
                      if (x.index() != y.index()) return false;
                      if (const auto* s = std::get_if<Stmt>(&x)) return node_equal(*s, std::get<Stmt>(y));
                      return node_equal(std::get<FuncDef>(x), std::get<FuncDef>(y));
                    });
}

// ---------------------------------------------------------------- formatting

namespace {

// Binding strength; larger binds tighter.
enum Precedence : int { kComparison = 1, kAdditive = 2, kMultiplicative = 3, kUnary = 4, kPrimary = 5 };

int precedence_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdditive;
    case BinaryOp::Mul:
    case BinaryOp::Div: return kMultiplicative;
    default: return kComparison;
  }
}

int precedence_of(const Expr& e) {
  if (const auto* b = std::get_if<BinaryExpr>(&e.node)) return precedence_of(b->op);
  if (std::holds_alternative<UnaryExpr>(e.node)) return kUnary;
  return kPrimary;
}

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') {
      out += "\\\"";
    } else if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

class Printer {
 public:
  std::string expr(const Expr& e) {
    return std::visit(
        Overloaded{
            [](const NumberLit& n) { return format_number(n.value); },
            [](const StringLit& s) { return quote_string(s.value); },
            [this](const ArrayLit& a) { return "[" + list(a.elements) + "]"; },
            [](const NameExpr& n) { return n.name; },
            [this](const IndexExpr& i) { return i.base + "[" + expr(*i.index) + "]"; },
            [this](const CallExpr& c) { return c.callee + "(" + list(c.args) + ")"; },
            [this](const UnaryExpr& u) { return "-" + wrap(*u.operand, precedence_of(*u.operand) < kUnary); },
            [this](const BinaryExpr& b) {
              const int p = precedence_of(b.op);
              const int lp = precedence_of(*b.lhs);
              const int rp = precedence_of(*b.rhs);
              const bool lhs_parens = lp < p || (p == kComparison && lp == p);
              const bool rhs_parens = rp <= p;
              return wrap(*b.lhs, lhs_parens) + " " + std::string(binary_op_symbol(b.op)) + " " +
                     wrap(*b.rhs, rhs_parens);
            },
        },
        e.node);
  }

  void stmt(const Stmt& s, int depth) {
    std::visit(
        Overloaded{
            [&](const AssignStmt& a) { line(depth, assign(a)); },
            [&](const PrintStmt& p) { line(depth, kw(TokenKind::Print) + " " + expr(p.value)); },
            [&](const ReturnStmt& r) {
              line(depth, r.value ? kw(TokenKind::Return) + " " + expr(*r.value) : kw(TokenKind::Return));
            },
            [&](const BreakStmt&) { line(depth, kw(TokenKind::Break)); },
            [&](const ContinueStmt&) { line(depth, kw(TokenKind::Continue)); },
            [&](const ExprStmt& e) { line(depth, expr(e.value)); },
            [&](const IfStmt& i) {
              for (std::size_t k = 0; k < i.arms.size(); ++k) {
                line(depth, cond(i.arms[k].cond) + " " + kw(k == 0 ? TokenKind::If : TokenKind::ElseIf));
                block(i.arms[k].body, depth + 1);
              }
              if (i.else_body) {
                line(depth, kw(TokenKind::Else));
                block(*i.else_body, depth + 1);
              }
              line(depth, kw(TokenKind::End));
            },
            [&](const SelectStmt& s) {
              line(depth, cond(s.selector) + " " + kw(TokenKind::Select));
              for (const auto& c : s.cases) {
                line(depth + 1, kw(TokenKind::Case) + " " + cond(c.match));
                block(c.body, depth + 2);
              }
              if (s.otherwise) {
                line(depth + 1, kw(TokenKind::Otherwise));
                block(*s.otherwise, depth + 2);
              }
              line(depth, kw(TokenKind::End));
            },
            [&](const ForStmt& f) {
              line(depth, kw(TokenKind::For) + " (" + assign(f.init) + ", " + expr(f.cond) + ", " +
                              assign(f.update) + ")");
              block(f.body, depth + 1);
              line(depth, kw(TokenKind::End));
            },
            [&](const WhileStmt& w) {
              line(depth, cond(w.cond) + " " + kw(TokenKind::While));
              block(w.body, depth + 1);
              line(depth, kw(TokenKind::End));
            },
            [&](const DoUntilStmt& d) {
              line(depth, kw(TokenKind::Do));
              block(d.body, depth + 1);
              line(depth, kw(TokenKind::Until) + " " + cond(d.cond));
            },
        },
        s.node);
  }

  void func(const FuncDef& f) {
    std::string header = kw(TokenKind::Function) + " " + f.name + "(";
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i) header += ", ";
      header += f.params[i];
    }
    line(0, header + ")");
    block(f.body, 1);
    line(0, kw(TokenKind::End));
  }

  void block(const Block& b, int depth) {
    for (const auto& s : b) stmt(s, depth);
  }

  std::string take() { return std::move(out_); }

 private:
  static std::string kw(TokenKind k) { return std::string(keyword_spelling(k)); }

  std::string wrap(const Expr& e, bool parens) { return parens ? "(" + expr(e) + ")" : expr(e); }
  std::string cond(const Expr& e) { return "@(" + expr(e) + ")"; }

  std::string list(const std::vector<Expr>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      s += expr(items[i]);
    }
    return s;
  }

  std::string assign(const AssignStmt& a) {
    std::string target = a.target.name;
    if (a.target.index) target += "[" + expr(*a.target.index) + "]";
    return target + " = " + expr(a.value);
  }

  void line(int depth, const std::string& text) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  std::string out_;
};

}  // namespace

std::string format_ast(const Expr& expr) { return Printer{}.expr(expr); }

std::string format_ast(const Stmt& stmt) {
  Printer p;
  p.stmt(stmt, 0);
  std::string text = p.take();
  text.pop_back();  // trailing newline
  return text;
}

std::string format_ast(const Program& program) {
  Printer p;
  for (const auto& item : program.items) {
    if (const auto* s = std::get_if<Stmt>(&item)) {
      p.stmt(*s, 0);
    } else {
      p.func(std::get<FuncDef>(item));
    }
  }
  return p.take();
}

}  // namespace ezhil
