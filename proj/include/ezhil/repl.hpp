#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "ezhil/environment.hpp"
#include "ezhil/token.hpp"

namespace ezhil {

inline constexpr std::string_view kPrompt = "எழில்> ";
inline constexpr std::string_view kContinuationPrompt = "...... ";

/// Blocks opened (function, if, for, while, select, do) minus blocks closed
/// (end, until). Computed from token kinds only.
int block_depth(std::span<const Token> tokens);

/// Line-at-a-time driver over one Environment. Lines are buffered until every
/// opened block is closed, then the buffered unit runs. Errors are reported
/// and leave the environment as it was at the point of failure.
class ReplSession {
 public:
  enum class Status { Ready, NeedMore, Exit };

  /// Bare-expression values go to `echo` (defaults to `out`).
  ReplSession(Environment& env, std::ostream& out, std::ostream& err, std::ostream* echo = nullptr);

  Status feed_line(std::string_view line);

  /// Runs whatever is buffered (used at end of input).
  void flush();

  [[nodiscard]] bool pending() const { return !buffer_.empty(); }
  [[nodiscard]] std::string_view prompt() const { return pending() ? kContinuationPrompt : kPrompt; }
  [[nodiscard]] int error_count() const { return errors_; }

 private:
  void execute();

  Environment& env_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostream& echo_;
  std::string buffer_;
  int errors_ = 0;
};

/// Reads lines until `exit` or end of input. Always returns 0.
int repl_loop(Environment& env, std::istream& in, std::ostream& out, std::ostream& err, bool show_prompts = true);

}  // namespace ezhil
