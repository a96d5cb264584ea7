#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "ezhil/evaluator.hpp"
#include "ezhil/parser.hpp"
#include "support/deep_copy_gen.hpp"
#include "support/harness.hpp"
#include "support/program_gen.hpp"

using namespace ezhil;

TEST_CASE("property: parse(format_ast(p)) is node_equal to p") {
  testing::ProgramGenerator gen(20240601);
  for (int i = 0; i < 300; ++i) {
    const Program p = gen.program(6);
    const std::string text = format_ast(p);
    CAPTURE(text);
    Program reparsed;
    REQUIRE_NOTHROW(reparsed = parse_source(text));
    CHECK(node_equal(reparsed, p));
    std::string outside_strings = text;
    for (auto at = outside_strings.find("\"## not a comment\""); at != std::string::npos;
         at = outside_strings.find("\"## not a comment\"")) {
      outside_strings.erase(at, 18);
    }
    CHECK(outside_strings.find("##") == std::string::npos);
  }
}

TEST_CASE("property: callee mutation of an array parameter never reaches the caller") {
  testing::MutationGenerator gen(99);
  for (int i = 0; i < 100; ++i) {
    const auto c = gen.next();
    CAPTURE(c.source);
    Environment env;
    std::ostringstream out;
    run_program(parse_source(c.source), env, out);
    REQUIRE(env.lookup("orig") != nullptr);
    CHECK(testing::bit_identical(*env.lookup("orig"), c.original));
    CHECK(testing::bit_identical(*env.lookup("result"), c.mutated));
  }
}

TEST_CASE("property: a for loop equals init + while(cond){body; update} without continue") {
  std::mt19937 rng(5);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 60; ++trial) {
    const int start = pick(-3, 3);
    const int limit = pick(-2, 12);
    const int step = pick(1, 3);
    const int stop_at = pick(0, 15);
    std::string body = "  பதிப்பி i * " + std::to_string(pick(1, 4)) + "\n";
    if (trial % 2) body += "  @(i == " + std::to_string(stop_at) + ") ஆனால்\n    நேருத்து\n  முடி\n";
    body += "  total = total + i\n";
    const std::string init = "i = " + std::to_string(start);
    const std::string cond = "i < " + std::to_string(limit);
    const std::string update = "i = i + " + std::to_string(step);

    const std::string as_for =
        "total = 0\nஆக (" + init + ", " + cond + ", " + update + ")\n" + body + "முடி\nபதிப்பி total\n";
    const std::string as_while =
        "total = 0\n" + init + "\n@(" + cond + ") வரை\n" + body + "  " + update + "\nமுடி\nபதிப்பி total\n";
    CAPTURE(as_for);
    CHECK(testing::run_source(as_for).out == testing::run_source(as_while).out);
  }
}

TEST_CASE("property: call-free expressions leave the environment untouched") {
  testing::ProgramGenerator gen(314);
  const std::string setup = "x = 3\ny = [1, 2, 3]\ntotal = \"s\"\nமு = 0\n";
  for (int i = 0; i < 200; ++i) {
    Expr e = gen.expr(4);
    // Calls and indexing are outside this property.
    bool has_call_or_index = false;
    const std::function<void(const Expr&)> scan = [&](const Expr& node) {
      visit(Overloaded{
                [&](const CallExpr&) { has_call_or_index = true; },
                [&](const IndexExpr&) { has_call_or_index = true; },
                [&](const ArrayLit& a) {
                  for (const auto& el : a.elements) scan(el);
                },
                [&](const UnaryExpr& u) { scan(*u.operand); },
                [&](const BinaryExpr& b) {
                  scan(*b.lhs);
                  scan(*b.rhs);
                },
                [](const auto&) {},
            },
            node);
    };
    scan(e);
    if (has_call_or_index) continue;

    Environment env;
    std::ostringstream out;
    run_program(parse_source(setup), env, out);
    const auto before = env.globals();
    try {
      eval_expression(e, env, out);
    } catch (const RuntimeError&) {
    }
    CHECK(env.globals().size() == before.size());
    for (const auto& [name, value] : before) CHECK(value_equal(env.globals().at(name), value));
    CHECK(out.str().empty());
  }
}
