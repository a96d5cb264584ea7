#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ezhil {

/// Runtime datum. Values own their storage outright (arrays hold their
/// elements by value), so copying a Value is a deep copy.
class Value {
 public:
  using Array = std::vector<Value>;
  enum class Kind : std::uint8_t { Nil, Number, Str, Bool, Array };

  Value() = default;
  Value(double number) : data_(number) {}  // NOLINT(google-explicit-constructor)
  Value(int number) : data_(static_cast<double>(number)) {}  // NOLINT(google-explicit-constructor)
  Value(std::string text) : data_(std::move(text)) {}  // NOLINT(google-explicit-constructor)
  Value(const char* text) : data_(std::string(text)) {}  // NOLINT(google-explicit-constructor)
  Value(bool flag) : data_(flag) {}  // NOLINT(google-explicit-constructor)
  Value(Array elements) : data_(std::move(elements)) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] Kind kind() const { return static_cast<Kind>(data_.index()); }
  [[nodiscard]] bool is_nil() const { return kind() == Kind::Nil; }
  [[nodiscard]] bool is_number() const { return kind() == Kind::Number; }
  [[nodiscard]] bool is_str() const { return kind() == Kind::Str; }
  [[nodiscard]] bool is_bool() const { return kind() == Kind::Bool; }
  [[nodiscard]] bool is_array() const { return kind() == Kind::Array; }

  [[nodiscard]] double as_number() const { return std::get<double>(data_); }
  [[nodiscard]] const std::string& as_str() const { return std::get<std::string>(data_); }
  [[nodiscard]] bool as_bool() const { return std::get<bool>(data_); }
  [[nodiscard]] const Array& as_array() const { return std::get<Array>(data_); }
  [[nodiscard]] Array& as_array() { return std::get<Array>(data_); }

 private:
  struct Nil {};
  std::variant<Nil, double, std::string, bool, Array> data_;
};

std::string_view kind_name(Value::Kind kind);

/// Equality used by `==` and select-case matching: tags must agree; arrays
/// compare element-wise; Nil equals Nil.
bool value_equal(const Value& a, const Value& b);

Value deep_copy(const Value& v);

/// Text written by print: integral numbers without a decimal point, strings
/// raw at top level and quoted inside arrays, booleans as மெய்/பொய், Nil as "".
std::string render_value(const Value& v);

}  // namespace ezhil
