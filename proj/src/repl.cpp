#include "ezhil/repl.hpp"

#include "ezhil/error.hpp"
#include "ezhil/evaluator.hpp"
#include "ezhil/lexer.hpp"
#include "ezhil/parser.hpp"

namespace ezhil {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

int block_depth(std::span<const Token> tokens) {
  int depth = 0;
  for (const auto& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::Function:
      case TokenKind::If:
      case TokenKind::For:
      case TokenKind::While:
      case TokenKind::Select:
      case TokenKind::Do: ++depth; break;
      case TokenKind::End:
      case TokenKind::Until: --depth; break;
      default: break;
    }
  }
  return depth;
}

ReplSession::ReplSession(Environment& env, std::ostream& out, std::ostream& err, std::ostream* echo)
    : env_(env), out_(out), err_(err), echo_(echo ? *echo : out) {}

ReplSession::Status ReplSession::feed_line(std::string_view line) {
  if (buffer_.empty() && trim(line) == "exit") return Status::Exit;
  buffer_ += line;
  buffer_ += '\n';

  try {
    if (block_depth(tokenize(buffer_)) > 0) return Status::NeedMore;
  } catch (const LexError& e) {
    err_ << e.describe() << '\n';
    ++errors_;
    buffer_.clear();
    return Status::Ready;
  }
  execute();
  return Status::Ready;
}

void ReplSession::flush() {
  if (pending()) execute();
}

void ReplSession::execute() {
  const std::string source = std::move(buffer_);
  buffer_.clear();
  try {
    const Program program = parse_source(source);
    run_program(program, env_, out_, [this](const Value& v) {
      if (!v.is_nil()) echo_ << render_value(v) << '\n';
    });
  } catch (const Error& e) {
    out_.flush();
    err_ << e.describe() << '\n';
    ++errors_;
  }
}

int repl_loop(Environment& env, std::istream& in, std::ostream& out, std::ostream& err, bool show_prompts) {
  ReplSession session(env, out, err);
  std::string line;
  for (;;) {
    if (show_prompts) {
      out << session.prompt();
      out.flush();
    }
    if (!std::getline(in, line)) break;
    if (session.feed_line(line) == ReplSession::Status::Exit) return 0;
  }
  if (show_prompts) out << '\n';
  session.flush();
  return 0;
}

}  // namespace ezhil
