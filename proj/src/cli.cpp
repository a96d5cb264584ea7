#include "ezhil/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "ezhil/ast.hpp"
#include "ezhil/environment.hpp"
#include "ezhil/error.hpp"
#include "ezhil/evaluator.hpp"
#include "ezhil/lexer.hpp"
#include "ezhil/parser.hpp"
#include "ezhil/repl.hpp"
#include "ezhil/unicode.hpp"

namespace ezhil::cli {
namespace {

std::string escape_lexeme(std::string_view lexeme) {
  std::string out;
  for (const char c : lexeme) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

struct Source {
  std::string name;
  std::string text;
};

int execute(const CliConfig& config, const Source& source, std::ostream& out, std::ostream& err) {
  if (!unicode::is_valid_utf8(source.text)) {
    err << source.name << ": input is not valid UTF-8\n";
    return kBadEncoding;
  }

  Program program;
  try {
    const auto tokens = tokenize(source.text);
    if (config.dump_tokens) {
      for (const auto& tok : tokens) {
        out << token_kind_name(tok.kind) << '\t' << escape_lexeme(tok.lexeme) << '\t' << tok.line << ':'
            << tok.column << '\n';
      }
    }
    program = parse(tokens);
  } catch (const Error& e) {
    err << source.name << ':' << e.describe() << '\n';
    return kSyntaxError;
  }
  if (config.dump_ast) out << format_ast(program);
  if (config.dump_tokens || config.dump_ast) return kOk;

  Environment env(default_registry(), config.max_recursion);
  try {
    run_program(program, env, out);
  } catch (const RuntimeError& e) {
    out.flush();
    err << source.name << ':' << e.describe() << '\n';
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ezhil (எழில்) interpreter", "ezhil"};
  std::string file;
  std::string code;
  CliConfig config;
  app.add_option("file", file, "Script to run (any extension; .n by convention)");
  auto* eval_opt = app.add_option("-e,--eval", code, "Run the given program text");
  app.add_flag("--dump-tokens", config.dump_tokens, "Print one token per line and exit");
  app.add_flag("--dump-ast", config.dump_ast, "Print the canonical program text and exit");
  app.add_option("--max-recursion", config.max_recursion, "Maximum call depth")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", std::string(kVersion));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ezhil: " << e.what() << '\n' << "usage: ezhil [--dump-tokens] [--dump-ast] (FILE | -e CODE)\n";
    return kUsage;
  }

  const bool has_file = !file.empty();
  const bool has_eval = eval_opt->count() > 0;
  if (has_file && has_eval) {
    err << "ezhil: give either a file or -e, not both\n";
    return kUsage;
  }
  if (!has_file && !has_eval) {
    if (config.dump_tokens || config.dump_ast) {
      err << "ezhil: --dump-tokens/--dump-ast need a file or -e\n";
      return kUsage;
    }
    Environment env(default_registry(), config.max_recursion);
    return repl_loop(env, in, out, err);
  }

  Source source;
  if (has_eval) {
    config.mode = EvalString{code};
    source = {"<eval>", code};
  } else {
    config.mode = RunFile{file};
    std::ifstream stream(file, std::ios::binary);
    if (!stream) {
      err << "ezhil: cannot read '" << file << "'\n";
      return kNoInput;
    }
    std::ostringstream contents;
    contents << stream.rdbuf();
    if (stream.bad()) {
      err << "ezhil: cannot read '" << file << "'\n";
      return kNoInput;
    }
    source = {file, contents.str()};
  }
  return execute(config, source, out, err);
}

}  // namespace ezhil::cli
