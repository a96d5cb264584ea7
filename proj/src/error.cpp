#include "ezhil/error.hpp"

#include <sstream>

namespace ezhil {

std::string Error::describe() const {
  std::ostringstream os;
  os << pos_ << ": error: " << what();
  return os.str();
}

std::string LexError::describe() const {
  std::ostringstream os;
  os << pos() << ": lex error: " << what();
  return os.str();
}

std::string ParseError::describe() const {
  std::ostringstream os;
  os << pos() << ": parse error: " << what();
  return os.str();
}

std::string_view runtime_error_kind_name(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::TypeMismatch: return "TypeMismatch";
    case RuntimeErrorKind::Unbound: return "Unbound";
    case RuntimeErrorKind::ArityMismatch: return "ArityMismatch";
    case RuntimeErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case RuntimeErrorKind::NonIntegerIndex: return "NonIntegerIndex";
    case RuntimeErrorKind::DivisionByZero: return "DivisionByZero";
    case RuntimeErrorKind::BreakOutsideLoop: return "BreakOutsideLoop";
    case RuntimeErrorKind::ContinueOutsideLoop: return "ContinueOutsideLoop";
    case RuntimeErrorKind::ReturnOutsideFunction: return "ReturnOutsideFunction";
    case RuntimeErrorKind::StackOverflow: return "StackOverflow";
    case RuntimeErrorKind::Redefinition: return "Redefinition";
  }
  return "?";
}

std::string RuntimeError::describe() const {
  std::ostringstream os;
  os << pos() << ": runtime error [" << runtime_error_kind_name(kind_) << "]: " << what();
  return os.str();
}

}  // namespace ezhil
