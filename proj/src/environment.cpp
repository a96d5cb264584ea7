#include "ezhil/environment.hpp"

namespace ezhil {

Environment::Environment(BuiltinRegistry builtins, std::size_t max_depth)
    : builtins_(std::move(builtins)), max_depth_(max_depth) {}

const Value* Environment::lookup(const std::string& name) const {
  if (!frames_.empty()) {
    const auto& locals = frames_.back().locals;
    if (const auto it = locals.find(name); it != locals.end()) return &it->second;
  }
  const auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : &it->second;
}

Value* Environment::lookup(const std::string& name) {
  return const_cast<Value*>(std::as_const(*this).lookup(name));
}

void Environment::assign(const std::string& name, Value value) {
  if (Value* slot = lookup(name)) {
    *slot = std::move(value);
  } else if (!frames_.empty()) {
    frames_.back().locals.insert_or_assign(name, std::move(value));
  } else {
    globals_.insert_or_assign(name, std::move(value));
  }
}

bool Environment::define_function(std::shared_ptr<const FuncDef> def) {
  if (builtins_.contains(def->name)) return false;
  auto name = def->name;
  functions_.insert_or_assign(std::move(name), std::move(def));
  return true;
}

const FuncDef* Environment::find_function(const std::string& name) const {
  const auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : it->second.get();
}

}  // namespace ezhil
