#include "ezhil/builtins.hpp"

#include <algorithm>
#include <cmath>

#include "ezhil/unicode.hpp"

namespace ezhil {
namespace {

[[noreturn]] void type_error(const std::string& message) {
  throw BuiltinFailure{RuntimeErrorKind::TypeMismatch, message};
}

double number_arg(std::span<const Value> args, std::size_t i, const char* fn) {
  if (!args[i].is_number()) {
    type_error(std::string(fn) + ": argument " + std::to_string(i + 1) + " must be a number, got " +
               std::string(kind_name(args[i].kind())));
  }
  return args[i].as_number();
}

// max/min take either two or more numbers or a single array of numbers.
template <typename Pick>
Value extremum(std::span<const Value> args, const char* fn, Pick pick) {
  std::span<const Value> pool = args;
  if (args.size() == 1) {
    if (!args[0].is_array()) type_error(std::string(fn) + ": expected an array or at least two numbers");
    pool = args[0].as_array();
    if (pool.empty()) type_error(std::string(fn) + ": empty array");
  }
  double best = number_arg(pool, 0, fn);
  for (std::size_t i = 1; i < pool.size(); ++i) best = pick(best, number_arg(pool, i, fn));
  return best;
}

}  // namespace

void BuiltinRegistry::register_builtin(Builtin builtin) {
  if (builtin.name.empty()) throw std::invalid_argument("builtin name must be nonempty");
  if (builtin.max_arity && builtin.min_arity > *builtin.max_arity) {
    throw std::invalid_argument("builtin '" + builtin.name + "': min_arity exceeds max_arity");
  }
  if (!builtin.impl) throw std::invalid_argument("builtin '" + builtin.name + "' has no implementation");
  if (entries_.contains(builtin.name)) throw DuplicateBuiltin(builtin.name);
  auto name = builtin.name;
  entries_.emplace(std::move(name), std::move(builtin));
}

void BuiltinRegistry::register_alias(const std::string& alias, const std::string& target) {
  const Builtin* original = lookup(target);
  if (!original) throw std::invalid_argument("no builtin named '" + target + "'");
  Builtin copy = *original;
  copy.name = alias;
  register_builtin(std::move(copy));
}

const Builtin* BuiltinRegistry::lookup(const std::string& name) const {
  const auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

Value invoke_builtin(const Builtin& builtin, std::span<const Value> args) {
  if (!builtin.accepts(args.size())) {
    std::string expected = std::to_string(builtin.min_arity);
    if (!builtin.max_arity) {
      expected += " or more";
    } else if (*builtin.max_arity != builtin.min_arity) {
      expected += " to " + std::to_string(*builtin.max_arity);
    }
    throw BuiltinFailure{RuntimeErrorKind::ArityMismatch, builtin.name + " expects " + expected +
                                                              " argument(s), got " + std::to_string(args.size())};
  }
  return builtin.impl(args);
}

BuiltinRegistry default_registry() {
  BuiltinRegistry registry;

  registry.register_builtin({"len", 1, 1, [](std::span<const Value> args) -> Value {
                               const Value& v = args[0];
                               if (v.is_str()) return static_cast<double>(unicode::grapheme_count(v.as_str()));
                               if (v.is_array()) return static_cast<double>(v.as_array().size());
                               type_error("len: expected a string or array, got " + std::string(kind_name(v.kind())));
                             }});

  registry.register_builtin({"max", 1, std::nullopt, [](std::span<const Value> args) {
                               return extremum(args, "max", [](double a, double b) { return std::max(a, b); });
                             }});
  registry.register_builtin({"min", 1, std::nullopt, [](std::span<const Value> args) {
                               return extremum(args, "min", [](double a, double b) { return std::min(a, b); });
                             }});

  registry.register_builtin(
      {"abs", 1, 1, [](std::span<const Value> args) -> Value { return std::fabs(number_arg(args, 0, "abs")); }});

  registry.register_builtin({"sqrt", 1, 1, [](std::span<const Value> args) -> Value {
                               const double x = number_arg(args, 0, "sqrt");
                               if (x < 0) type_error("sqrt: argument must be non-negative");
                               return std::sqrt(x);
                             }});

  registry.register_builtin({"pow", 2, 2, [](std::span<const Value> args) -> Value {
                               const double base = number_arg(args, 0, "pow");
                               const double exponent = number_arg(args, 1, "pow");
                               if (base == 0 && exponent < 0) {
                                 throw BuiltinFailure{RuntimeErrorKind::DivisionByZero,
                                                      "pow: zero raised to a negative power"};
                               }
                               const double result = std::pow(base, exponent);
                               if (std::isnan(result)) type_error("pow: result is not a real number");
                               return result;
                             }});
  return registry;
}

}  // namespace ezhil
