#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ezhil/ast.hpp"
#include "ezhil/error.hpp"
#include "ezhil/lexer.hpp"
#include "support/program_gen.hpp"

using namespace ezhil;
using K = TokenKind;

namespace {

std::vector<TokenKind> kinds(std::string_view source) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(source)) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST_CASE("assignment line from the summation program") {
  const auto toks = tokenize("மு = 0;");
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].kind == K::Ident);
  CHECK(toks[0].lexeme == "மு");
  CHECK(toks[1].kind == K::Assign);
  CHECK(toks[2].kind == K::Number);
  CHECK(*toks[2].number_value == 0.0);
  CHECK(toks[3].kind == K::Semicolon);
  CHECK(toks[4].kind == K::Eof);
}

TEST_CASE("empty input is a lone EOF") { CHECK(kinds("") == std::vector{K::Eof}); }

TEST_CASE("condition group before a keyword") {
  CHECK(kinds("@(n == 0) ஆனால்") ==
        std::vector{K::At, K::LParen, K::Ident, K::Eq, K::Number, K::RParen, K::If, K::Eof});
}

TEST_CASE("comments run to end of line") {
  CHECK(kinds("## கடைசி செய்க") == std::vector{K::Eof});
  CHECK(kinds("x ## tail\ny") == std::vector{K::Ident, K::Newline, K::Ident, K::Eof});
  CHECK_THROWS_AS(tokenize("# single"), LexError);
}

TEST_CASE("every keyword tokenizes to its own kind") {
  std::set<TokenKind> seen;
  for (const auto& entry : kKeywordTable) {
    CAPTURE(entry.spelling);
    CHECK(kinds(entry.spelling) == std::vector{entry.kind, K::Eof});
    seen.insert(entry.kind);
  }
  // One table entry per keyword kind, and every keyword kind has an entry.
  CHECK(kKeywordTable.size() == 16);
  CHECK(seen.size() == 16);
  for (int k = 0; k <= static_cast<int>(K::End); ++k) CHECK(seen.contains(static_cast<TokenKind>(k)));
}

TEST_CASE("longest match keeps compound keywords and keyword-prefixed names whole") {
  CHECK(kinds("இல்லைஆனால்") == std::vector{K::ElseIf, K::Eof});
  CHECK(kinds("முடியேனில்") == std::vector{K::Until, K::Eof});
  const auto toks = tokenize("செய்க முடிவு இல்லைஆ");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].kind == K::Ident);
  CHECK(toks[0].lexeme == "செய்க");
  CHECK(toks[1].kind == K::Ident);
  CHECK(toks[2].kind == K::Ident);
}

TEST_CASE("identifier characters") {
  CHECK(is_identifier_char("ட", IdentPosition::Head));
  CHECK(is_identifier_char("டி", IdentPosition::Head));
  CHECK(is_identifier_char("ம்", IdentPosition::Head));
  CHECK_FALSE(is_identifier_char("7", IdentPosition::Head));
  CHECK(is_identifier_char("7", IdentPosition::Tail));
  CHECK(is_identifier_char("_", IdentPosition::Head));
  CHECK(is_identifier_char("Q", IdentPosition::Head));
  CHECK_FALSE(is_identifier_char("-", IdentPosition::Tail));
  CHECK_FALSE(is_identifier_char("ா", IdentPosition::Head));  // lone vowel sign
  CHECK_FALSE(is_identifier_char("௧", IdentPosition::Head));       // Tamil digit
  CHECK_FALSE(is_identifier_char("é", IdentPosition::Head));
}

TEST_CASE("Tamil identifiers from the example programs are single tokens") {
  for (const char* name : {"மு", "டி", "அ", "ஆ", "கூட்டு", "mixed_பெயர்2"}) {
    CAPTURE(name);
    const auto toks = tokenize(name);
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].kind == K::Ident);
    CHECK(toks[0].lexeme == name);
  }
}

TEST_CASE("operators") {
  CHECK(kinds("== != <> < > <= >= = + - * / , ; [ ] ( ) @") ==
        std::vector{K::Eq, K::Neq, K::Neq, K::Lt, K::Gt, K::Lte, K::Gte, K::Assign, K::Plus, K::Minus, K::Star,
                    K::Slash, K::Comma, K::Semicolon, K::LBracket, K::RBracket, K::LParen, K::RParen, K::At,
                    K::Eof});
  CHECK_THROWS_AS(tokenize("!"), LexError);
}

TEST_CASE("numbers") {
  const auto toks = tokenize("42 3.25 007");
  CHECK(*toks[0].number_value == 42.0);
  CHECK(*toks[1].number_value == 3.25);
  CHECK(*toks[2].number_value == 7.0);
  CHECK(toks[1].lexeme == "3.25");
  CHECK_THROWS_AS(tokenize("1.2.3"), LexError);
  CHECK_THROWS_AS(tokenize("1."), LexError);
  CHECK_THROWS_AS(tokenize("12abc"), LexError);
}

TEST_CASE("strings and escapes") {
  const auto toks = tokenize(R"("வணக்கம்!" "a\"b\\c\n")");
  CHECK(*toks[0].string_value == "வணக்கம்!");
  CHECK(toks[0].lexeme == "\"வணக்கம்!\"");
  CHECK(*toks[1].string_value == "a\"b\\c\n");
  CHECK_THROWS_AS(tokenize("\"open"), LexError);
  CHECK_THROWS_AS(tokenize("\"broken\nline\""), LexError);
  CHECK_THROWS_AS(tokenize(R"("\q")"), LexError);
}

TEST_CASE("lex errors carry positions") {
  try {
    tokenize("x = 1\ny = $");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.pos() == SourcePos{2, 5});
  }
  try {
    tokenize("அம்மா ?");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.pos() == SourcePos{1, 5});  // three graphemes, a space, then '?'
  }
  CHECK_THROWS_AS(tokenize("bad \xFF"), LexError);
  CHECK_THROWS_AS(tokenize("x = \xE2\x82\xAC"), LexError);  // euro sign outside the alphabet
}

TEST_CASE("columns count graphemes and newlines restart them") {
  const auto toks = tokenize("அம்மா = 1\r\n  b");
  CHECK(toks[1].pos() == SourcePos{1, 5});
  CHECK(toks[3].kind == K::Newline);
  CHECK(toks[4].pos() == SourcePos{2, 3});
}

TEST_CASE("property: re-lexing canonically spaced lexemes keeps the kinds") {
  testing::ProgramGenerator gen(0xC0FFEE);
  for (int i = 0; i < 200; ++i) {
    const std::string source = format_ast(gen.program(5));
    const auto toks = tokenize(source);
    std::string joined;
    std::vector<TokenKind> expected;
    for (const auto& t : toks) {
      if (t.kind == K::Newline || t.kind == K::Eof) continue;
      joined += t.lexeme;
      joined += ' ';
      expected.push_back(t.kind);
    }
    expected.push_back(K::Eof);
    CHECK(kinds(joined) == expected);

    const bool ordered = std::is_sorted(toks.begin(), toks.end(),
                                        [](const Token& a, const Token& b) { return a.pos() < b.pos(); });
    CHECK(ordered);
  }
}
