#include "ezhil/value.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "ezhil/ast.hpp"

namespace ezhil {
namespace {

std::string render_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == std::trunc(x)) return format_number(x);
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), end};
}

void render_into(std::string& out, const Value& v, bool nested) {
  switch (v.kind()) {
    case Value::Kind::Nil: break;
    case Value::Kind::Number: out += render_number(v.as_number()); break;
    case Value::Kind::Str:
      if (nested) {
        out += '"';
        for (const char c : v.as_str()) {
          if (c == '"' || c == '\\') out += '\\';
          if (c == '\n') {
            out += "\\n";
            continue;
          }
          out += c;
        }
        out += '"';
      } else {
        out += v.as_str();
      }
      break;
    case Value::Kind::Bool: out += v.as_bool() ? "மெய்" : "பொய்"; break;
    case Value::Kind::Array: {
      out += '[';
      bool first = true;
      for (const auto& e : v.as_array()) {
        if (!first) out += ", ";
        first = false;
        render_into(out, e, true);
      }
      out += ']';
      break;
    }
  }
}

}  // namespace

std::string_view kind_name(Value::Kind kind) {
  switch (kind) {
    case Value::Kind::Nil: return "nil";
    case Value::Kind::Number: return "number";
    case Value::Kind::Str: return "string";
    case Value::Kind::Bool: return "boolean";
    case Value::Kind::Array: return "array";
  }
  return "?";
}

bool value_equal(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Nil: return true;
    case Value::Kind::Number:
      // NaN matches NaN so the relation stays reflexive.
      return a.as_number() == b.as_number() || (std::isnan(a.as_number()) && std::isnan(b.as_number()));
    case Value::Kind::Str: return a.as_str() == b.as_str();
    case Value::Kind::Bool: return a.as_bool() == b.as_bool();
    case Value::Kind::Array:
      return std::equal(a.as_array().begin(), a.as_array().end(), b.as_array().begin(), b.as_array().end(),
                        value_equal);
  }
  return false;
}

Value deep_copy(const Value& v) { return v; }

std::string render_value(const Value& v) {
  std::string out;
  render_into(out, v, false);
  return out;
}

}  // namespace ezhil
