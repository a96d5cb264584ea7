#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "ezhil/error.hpp"
#include "ezhil/value.hpp"

namespace ezhil {

/// Thrown by builtin implementations; the evaluator attaches the call site.
struct BuiltinFailure {
  RuntimeErrorKind kind;
  std::string message;
};

struct Builtin {
  using Impl = std::function<Value(std::span<const Value>)>;

  std::string name;
  std::size_t min_arity = 0;
  std::optional<std::size_t> max_arity;  // nullopt: unbounded
  Impl impl;

  [[nodiscard]] bool accepts(std::size_t argc) const {
    return argc >= min_arity && (!max_arity || argc <= *max_arity);
  }
};

class DuplicateBuiltin : public std::invalid_argument {
 public:
  explicit DuplicateBuiltin(const std::string& name)
      : std::invalid_argument("builtin '" + name + "' is already registered") {}
};

class BuiltinRegistry {
 public:
  /// Throws DuplicateBuiltin if the name is taken, std::invalid_argument if
  /// the entry is malformed (empty name, min_arity > max_arity, no impl).
  void register_builtin(Builtin builtin);

  /// Registers `alias` as another name for the existing builtin `target`.
  void register_alias(const std::string& alias, const std::string& target);

  [[nodiscard]] const Builtin* lookup(const std::string& name) const;
  [[nodiscard]] bool contains(const std::string& name) const { return lookup(name) != nullptr; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::map<std::string, Builtin>& entries() const { return entries_; }

 private:
  std::map<std::string, Builtin> entries_;
};

/// len, max, min, abs, sqrt, pow.
BuiltinRegistry default_registry();

/// Calls a builtin after checking arity; ArityMismatch names the builtin.
Value invoke_builtin(const Builtin& builtin, std::span<const Value> args);

}  // namespace ezhil
