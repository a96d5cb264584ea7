#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace ezhil::cli {

inline constexpr std::string_view kVersion = "ezhil 0.1.0";

enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kSyntaxError = 2,
  kUsage = 64,
  kBadEncoding = 65,
  kNoInput = 66,
};

struct RunFile {
  std::string path;
};
struct Repl {};
struct EvalString {
  std::string code;
};

struct CliConfig {
  std::variant<Repl, RunFile, EvalString> mode;
  bool dump_tokens = false;
  bool dump_ast = false;
  std::size_t max_recursion = 1000;
};

/// Entry point behind the `ezhil` executable; args excludes the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ezhil::cli
