#include <doctest.h>

#include <chrono>
#include <random>

#include "ezhil/error.hpp"
#include "ezhil/lexer.hpp"
#include "ezhil/parser.hpp"
#include "support/harness.hpp"

using namespace ezhil;

namespace {

Expr num(double v) { return {NumberLit{v}, {}}; }
Expr name(std::string n) { return {NameExpr{std::move(n)}, {}}; }
Expr bin(BinaryOp op, Expr l, Expr r) { return {BinaryExpr{op, std::move(l), std::move(r)}, {}}; }

Expr expr_of(std::string_view source) {
  const auto tokens = tokenize(source);
  Parser parser(tokens);
  Expr e = parser.parse_expression();
  REQUIRE(parser.at_end());
  return e;
}

Stmt stmt_of(std::string_view source) {
  const auto tokens = tokenize(source);
  Parser parser(tokens);
  return parser.parse_statement();
}

Stmt only_stmt(const Program& p) {
  REQUIRE(p.items.size() == 1);
  return std::get<Stmt>(p.items[0]);
}

}  // namespace

TEST_CASE("factorial program structure") {
  const Program p = parse_source(testing::read_program("factorial.n"));
  REQUIRE(p.items.size() == 2);
  const auto& fact = std::get<FuncDef>(p.items[0]);
  CHECK(fact.name == "fact");
  CHECK(fact.params == std::vector<std::string>{"n"});
  REQUIRE(fact.body.size() == 1);
  const auto& branch = std::get<IfStmt>(fact.body[0].node);
  REQUIRE(branch.arms.size() == 1);
  CHECK(node_equal(branch.arms[0].cond, bin(BinaryOp::Eq, name("n"), num(0))));
  REQUIRE(branch.arms[0].body.size() == 1);
  CHECK(node_equal(branch.arms[0].body[0], Stmt{ReturnStmt{num(1)}, {}}));
  REQUIRE(branch.else_body);
  const Expr recursive =
      bin(BinaryOp::Mul, name("n"), Expr{CallExpr{"fact", {bin(BinaryOp::Sub, name("n"), num(1))}}, {}});
  CHECK(node_equal((*branch.else_body)[0], Stmt{ReturnStmt{recursive}, {}}));

  const auto& print = std::get<Stmt>(p.items[1]);
  CHECK(node_equal(print, Stmt{PrintStmt{{CallExpr{"fact", {num(10)}}, {}}}, {}}));
}

TEST_CASE("empty program") { CHECK(parse_source("").items.empty()); }
TEST_CASE("blank lines and separators only") { CHECK(parse_source("\n;;\n ## note\n").items.empty()); }

TEST_CASE("while with continue") {
  const Stmt s = only_stmt(parse_source("@(x < 0) வரை தொடர் முடி"));
  const Stmt expected{WhileStmt{bin(BinaryOp::Lt, name("x"), num(0)), {Stmt{ContinueStmt{}, {}}}}, {}};
  CHECK(node_equal(s, expected));
}

TEST_CASE("missing expression after print") { CHECK_THROWS_AS(parse_source("பதிப்பி"), ParseError); }

TEST_CASE("statement forms") {
  const Stmt assign = stmt_of("மு = மு + x[டி]");
  const Stmt expected{
      AssignStmt{{"மு", std::nullopt},
                 bin(BinaryOp::Add, name("மு"), Expr{IndexExpr{"x", name("டி")}, {}})},
      {}};
  CHECK(node_equal(assign, expected));
  CHECK(node_equal(stmt_of("பின்கொடு 1"), Stmt{ReturnStmt{num(1)}, {}}));
  CHECK(node_equal(stmt_of("தொடர்"), Stmt{ContinueStmt{}, {}}));
  CHECK(node_equal(stmt_of("நேருத்து"), Stmt{BreakStmt{}, {}}));
  CHECK(node_equal(stmt_of("பின்கொடு"), Stmt{ReturnStmt{}, {}}));
  CHECK(node_equal(stmt_of("x[1] = 2"), Stmt{AssignStmt{{"x", num(1)}, num(2)}, {}}));
  CHECK(node_equal(stmt_of("f(1)"), Stmt{ExprStmt{{CallExpr{"f", {num(1)}}, {}}}, {}}));
  CHECK(node_equal(stmt_of("\"வணக்கம்!\""), Stmt{ExprStmt{{StringLit{"வணக்கம்!"}, {}}}, {}}));
}

TEST_CASE("expression precedence and associativity") {
  CHECK(node_equal(expr_of("n*fact(n - 1)"),
                   bin(BinaryOp::Mul, name("n"), Expr{CallExpr{"fact", {bin(BinaryOp::Sub, name("n"), num(1))}}, {}})));
  CHECK(node_equal(expr_of("1 + 2 * 3"), bin(BinaryOp::Add, num(1), bin(BinaryOp::Mul, num(2), num(3)))));
  CHECK(node_equal(expr_of("10 - 3 - 2"), bin(BinaryOp::Sub, bin(BinaryOp::Sub, num(10), num(3)), num(2))));
  CHECK(node_equal(expr_of("8 / 4 / 2"), bin(BinaryOp::Div, bin(BinaryOp::Div, num(8), num(4)), num(2))));
  CHECK(node_equal(expr_of("(1 + 2) * 3"), bin(BinaryOp::Mul, bin(BinaryOp::Add, num(1), num(2)), num(3))));
  CHECK(node_equal(expr_of("-x * 2"), bin(BinaryOp::Mul, Expr{UnaryExpr{UnaryOp::Neg, name("x")}, {}}, num(2))));
  CHECK(node_equal(expr_of("a + 1 < b * 2"),
                   bin(BinaryOp::Lt, bin(BinaryOp::Add, name("a"), num(1)), bin(BinaryOp::Mul, name("b"), num(2)))));
  CHECK(node_equal(expr_of("X <> Y"), bin(BinaryOp::Neq, name("X"), name("Y"))));
}

TEST_CASE("array literals") {
  const Expr inner{ArrayLit{{num(2), num(3)}}, {}};
  CHECK(node_equal(expr_of("[1, [2, 3]]"), Expr{ArrayLit{{num(1), inner}}, {}}));
  CHECK(node_equal(expr_of("[]"), Expr{ArrayLit{}, {}}));
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(parse_source("பதிப்பி a < b < c"), ParseError);
  CHECK_THROWS_AS(parse_source("பதிப்பி ()"), ParseError);
  CHECK_THROWS_AS(parse_source("பதிப்பி [1, 2"), ParseError);
  CHECK_THROWS_AS(parse_source("பதிப்பி x[1"), ParseError);
  CHECK_THROWS_AS(parse_source("பதிப்பி x[1][2]"), ParseError);
  CHECK_THROWS_AS(parse_source("x + 1 = 2"), ParseError);
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(parse_source("@(x) ஆனால் பதிப்பி 1"), ParseError);           // missing END
  CHECK_THROWS_AS(parse_source("இல்லை"), ParseError);                          // ELSE outside IF
  CHECK_THROWS_AS(parse_source("@(x) இல்லைஆனால்\nமுடி"), ParseError);         // ELSEIF outside IF
  CHECK_THROWS_AS(parse_source("தேர்வு @(1)"), ParseError);                   // CASE outside SELECT
  CHECK_THROWS_AS(parse_source("ஏதேனில்"), ParseError);                        // OTHERWISE outside SELECT
  CHECK_THROWS_AS(parse_source("(x < 0) வரை முடி"), ParseError);             // missing @(
  CHECK_THROWS_AS(parse_source("வரை முடி"), ParseError);                      // missing condition
  CHECK_THROWS_AS(parse_source("@ x வரை முடி"), ParseError);                  // missing (
  CHECK_THROWS_AS(parse_source("@(x) வரை\nநிரல்பாகம் f() முடி\nமுடி"), ParseError);  // nested FuncDef
  CHECK_THROWS_AS(parse_source("பதிப்பி 1 2"), ParseError);                    // trailing garbage
  CHECK_THROWS_AS(parse_source("முடி"), ParseError);
  CHECK_THROWS_AS(parse_source("செய் x = 1"), ParseError);                    // missing UNTIL
  CHECK_THROWS_AS(parse_source("செய் x = 1 முடியேனில்"), ParseError);        // UNTIL without condition
  CHECK_THROWS_AS(parse_source("நிரல்பாகம் f(a, a) முடி"), ParseError);       // duplicate params
  CHECK_THROWS_AS(parse_source("ஆக (, i < 3, i = i + 1) முடி"), ParseError);  // empty FOR slot
  CHECK_THROWS_AS(parse_source("ஆக (i < 3) முடி"), ParseError);
  CHECK_THROWS_AS(parse_source("@(s) தேர்ந்தெடு ஏதேனில் தேர்வு @(1) முடி"), ParseError);  // OTHERWISE not last
  CHECK_THROWS_AS(parse_source("@(s) தேர்ந்தெடு பதிப்பி 1 முடி"), ParseError);
  CHECK_THROWS_AS(parse_source("@(x) ஆனால் இல்லை @(y) இல்லைஆனால் முடி"), ParseError);
}

TEST_CASE("parse errors report the token where progress stopped") {
  try {
    parse_source("x = 1\nபதிப்பி 1 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.found().kind == TokenKind::Number);
    CHECK(e.found().lexeme == "2");
    CHECK(e.pos() == SourcePos{2, 8});
  }
  try {
    parse_source("@(x) ஆனால்\nபதிப்பி 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.found().kind == TokenKind::Eof);
    CHECK(e.expected() == std::vector{TokenKind::End});
  }
}

TEST_CASE("if / elseif / else chains accumulate arms") {
  const Stmt s = only_stmt(parse_source(
      "@(X <> Y) ஆனால்\n ##பல விஷயம் செய்க\n@(அ + ஆ) இல்லைஆனால்\n ##சில செய்க\nஇல்லை\n ## கடைசி செய்க\nமுடி"));
  const auto& chain = std::get<IfStmt>(s.node);
  CHECK(chain.arms.size() == 2);
  CHECK(chain.else_body.has_value());
  CHECK(node_equal(chain.arms[1].cond, bin(BinaryOp::Add, name("அ"), name("ஆ"))));
}

TEST_CASE("if body may contain nested conditionals that are not elseif arms") {
  const Stmt s = only_stmt(parse_source("@(a) ஆனால்\n@(b) வரை\nமுடி\n@(c) இல்லைஆனால்\nமுடி"));
  const auto& chain = std::get<IfStmt>(s.node);
  REQUIRE(chain.arms.size() == 2);
  CHECK(std::holds_alternative<WhileStmt>(chain.arms[0].body[0].node));
}

TEST_CASE("select case syntax") {
  const Stmt s = only_stmt(parse_source("@(அ + ஆ) தேர்ந்தெடு\nதேர்வு @(ஆ)\nஏதேனில்\n ## கடைசி செய்க\nமுடி"));
  const auto& sel = std::get<SelectStmt>(s.node);
  CHECK(sel.cases.size() == 1);
  CHECK(sel.otherwise.has_value());
  CHECK(sel.otherwise->empty());
  const Stmt bare = only_stmt(parse_source("@(1) தேர்ந்தெடு முடி"));
  CHECK(std::get<SelectStmt>(bare.node).cases.empty());
}

TEST_CASE("control-flow snippets parse with a body filled in") {
  CHECK_NOTHROW(parse_source("ஆக (X = 0, X < 3, X = X + 1) முடி"));
  CHECK_NOTHROW(parse_source("@(X < 0) வரை\n ## பல விஷயம் செய்க\nமுடி"));
  CHECK_NOTHROW(parse_source("செய்\n ##பல விஷயம் செய்க\nமுடியேனில் @(X < 0)"));
  CHECK_NOTHROW(parse_source("நிரல்பாகம் பெயர் @()\nமுடி"));
}

TEST_CASE("function definitions") {
  const Program p = parse_source("நிரல்பாகம் f @(a, b)\nபின்கொடு a\nமுடி\nநிரல்பாகம் g()\nமுடி");
  REQUIRE(p.items.size() == 2);
  CHECK(std::get<FuncDef>(p.items[0]).params == std::vector<std::string>{"a", "b"});
  CHECK(std::get<FuncDef>(p.items[1]).params.empty());
}

TEST_CASE("all example programs parse") {
  for (const char* file : {"factorial.n", "gcd.n", "gcd_verbatim.n", "sum.n", "hello.n", "hello_verbatim.n", "fib.n",
                           "keywords.n"}) {
    CAPTURE(file);
    CHECK_NOTHROW(parse_source(testing::read_program(file)));
  }
}

TEST_CASE("statements may share a line when separated by semicolons") {
  const Program p = parse_source("x = 1; y = 2;; பதிப்பி x + y");
  CHECK(p.items.size() == 3);
}

TEST_CASE("property: parsing is deterministic and always terminates on random tokens") {
  std::mt19937 rng(7);
  const std::vector<Token> pool = tokenize(
      "@ ( ) [ ] , ; \n = + - * / == != < > <= >= x மு 1 2.5 \"s\" "
      "ஆனால் இல்லைஆனால் இல்லை தேர்ந்தெடு தேர்வு ஏதேனில் ஆக வரை செய் முடியேனில் நேருத்து தொடர் பின்கொடு பதிப்பி நிரல்பாகம் முடி");
  const auto start = std::chrono::steady_clock::now();
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::vector<Token> tokens;
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int k = 0; k < n; ++k) {
      tokens.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 2)(rng)]);
    }
    tokens.push_back(pool.back());  // EOF
    try {
      const Program a = parse(tokens);
      const Program b = parse(tokens);
      CHECK(node_equal(a, b));
      ++parsed;
    } catch (const ParseError& e) {
      (void)e;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::seconds(10));
  MESSAGE("random token lists that parsed: " << parsed);
}

TEST_CASE("absurd nesting is a parse error, not a crash") {
  const std::string parens = "பதிப்பி " + std::string(200'000, '(') + "1" + std::string(200'000, ')');
  CHECK_THROWS_AS(parse_source(parens), ParseError);
  const std::string minus = "பதிப்பி " + std::string(300'000, '-') + "1";
  CHECK_THROWS_AS(parse_source(minus), ParseError);
  std::string blocks;
  for (int i = 0; i < 100'000; ++i) blocks += "@(1) வரை\n";
  CHECK_THROWS_AS(parse_source(blocks), ParseError);
}
