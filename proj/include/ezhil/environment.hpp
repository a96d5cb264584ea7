#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ezhil/ast.hpp"
#include "ezhil/builtins.hpp"
#include "ezhil/value.hpp"

namespace ezhil {

struct Frame {
  std::string function;
  std::unordered_map<std::string, Value> locals;
};

/// Global scope, per-call frames, user functions and builtins. Inside a call
/// names resolve in the current frame, then globals; at top level, globals
/// only. User functions and builtins share one namespace.
class Environment {
 public:
  static constexpr std::size_t kDefaultMaxDepth = 1000;

  explicit Environment(BuiltinRegistry builtins = default_registry(),
                       std::size_t max_depth = kDefaultMaxDepth);

  [[nodiscard]] const Value* lookup(const std::string& name) const;
  [[nodiscard]] Value* lookup(const std::string& name);

  /// Rebinds an existing name where it lives, otherwise creates it in the
  /// innermost scope.
  void assign(const std::string& name, Value value);

  [[nodiscard]] const std::unordered_map<std::string, Value>& globals() const { return globals_; }

  /// Returns false when `def.name` collides with a builtin.
  bool define_function(std::shared_ptr<const FuncDef> def);
  [[nodiscard]] const FuncDef* find_function(const std::string& name) const;
  [[nodiscard]] const Builtin* find_builtin(const std::string& name) const { return builtins_.lookup(name); }
  [[nodiscard]] const BuiltinRegistry& builtins() const { return builtins_; }

  void push_frame(Frame frame) { frames_.push_back(std::move(frame)); }
  void pop_frame() { frames_.pop_back(); }
  [[nodiscard]] std::size_t depth() const { return frames_.size(); }
  [[nodiscard]] bool in_call() const { return !frames_.empty(); }
  [[nodiscard]] const std::vector<Frame>& frames() const { return frames_; }

  [[nodiscard]] std::size_t max_depth() const { return max_depth_; }
  void set_max_depth(std::size_t depth) { max_depth_ = depth; }

 private:
  std::unordered_map<std::string, Value> globals_;
  std::map<std::string, std::shared_ptr<const FuncDef>> functions_;
  std::vector<Frame> frames_;
  BuiltinRegistry builtins_;
  std::size_t max_depth_;
};

}  // namespace ezhil
