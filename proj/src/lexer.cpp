#include "ezhil/lexer.hpp"

#include <charconv>
#include <string>

#include "ezhil/error.hpp"
#include "ezhil/unicode.hpp"

namespace ezhil {
namespace {

bool is_ascii_letter(char32_t cp) { return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z'); }
bool is_ascii_digit(std::string_view g) { return g.size() == 1 && g[0] >= '0' && g[0] <= '9'; }
bool is_newline(std::string_view g) { return g == "\n" || g == "\r\n" || g == "\r"; }
bool is_blank(std::string_view g) { return g == " " || g == "\t" || g == "\f" || g == "\v"; }

class Scanner {
 public:
  explicit Scanner(std::string_view source)
      : source_(source), graphemes_(unicode::graphemes(source)) {}

  std::vector<Token> run() {
    while (!at_end()) {
      const std::string_view g = peek();
      if (is_blank(g)) {
        advance();
      } else if (is_newline(g)) {
        const SourcePos pos = pos_;
        advance();
        emit(TokenKind::Newline, g, pos);
      } else if (g == "#") {
        skip_comment();
      } else if (g == "\"") {
        scan_string();
      } else if (is_ascii_digit(g)) {
        scan_number();
      } else if (is_identifier_char(g, IdentPosition::Head)) {
        scan_word();
      } else {
        scan_operator();
      }
    }
    emit(TokenKind::Eof, {}, pos_);
    return std::move(tokens_);
  }

 private:
  [[nodiscard]] bool at_end() const { return index_ >= graphemes_.size(); }
  [[nodiscard]] std::string_view peek(std::size_t ahead = 0) const {
    return index_ + ahead < graphemes_.size() ? graphemes_[index_ + ahead] : std::string_view{};
  }

  std::string_view advance() {
    const std::string_view g = graphemes_[index_++];
    if (is_newline(g)) {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return g;
  }

  // Source text from the grapheme at `first` up to the current position.
  [[nodiscard]] std::string_view slice(std::size_t first) const {
    const char* begin = graphemes_[first].data();
    const char* end = at_end() ? source_.data() + source_.size() : graphemes_[index_].data();
    return {begin, static_cast<std::size_t>(end - begin)};
  }

  Token& emit(TokenKind kind, std::string_view lexeme, SourcePos pos) {
    Token tok;
    tok.kind = kind;
    tok.lexeme = std::string(lexeme);
    tok.line = pos.line;
    tok.column = pos.column;
    return tokens_.emplace_back(std::move(tok));
  }

  void skip_comment() {
    if (peek(1) != "#") throw LexError("unexpected character '#' (comments start with ##)", pos_);
    while (!at_end() && !is_newline(peek())) advance();
  }

  void scan_string() {
    const SourcePos start = pos_;
    const std::size_t first = index_;
    advance();
    std::string value;
    for (;;) {
      if (at_end() || is_newline(peek())) throw LexError("unterminated string literal", start);
      const std::string_view g = advance();
      if (g == "\"") break;
      if (g == "\\") {
        if (at_end() || is_newline(peek())) throw LexError("unterminated string literal", start);
        const SourcePos esc_pos = pos_;
        const std::string_view e = advance();
        if (e == "\"") {
          value += '"';
        } else if (e == "\\") {
          value += '\\';
        } else if (e == "n") {
          value += '\n';
        } else {
          throw LexError("unknown escape sequence '\\" + std::string(e) + "'", esc_pos);
        }
        continue;
      }
      value += g;
    }
    Token& tok = emit(TokenKind::String, slice(first), start);
    tok.string_value = std::move(value);
  }

  void scan_number() {
    const SourcePos start = pos_;
    const std::size_t first = index_;
    while (is_ascii_digit(peek())) advance();
    if (peek() == ".") {
      advance();
      if (!is_ascii_digit(peek())) throw LexError("malformed number: digit expected after '.'", start);
      while (is_ascii_digit(peek())) advance();
      if (peek() == ".") throw LexError("malformed number: second decimal point", start);
    }
    if (!at_end() && is_identifier_char(peek(), IdentPosition::Tail)) {
      throw LexError("malformed number: letter directly after digits", start);
    }
    const std::string_view text = slice(first);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw LexError("malformed number '" + std::string(text) + "'", start);
    }
    Token& tok = emit(TokenKind::Number, text, start);
    tok.number_value = value;
  }

  void scan_word() {
    const SourcePos start = pos_;
    const std::size_t first = index_;
    advance();
    while (!at_end() && is_identifier_char(peek(), IdentPosition::Tail)) advance();
    const std::string_view word = slice(first);
    TokenKind kind = TokenKind::Ident;
    for (const auto& entry : kKeywordTable) {
      if (entry.spelling == word) {
        kind = entry.kind;
        break;
      }
    }
    emit(kind, word, start);
  }

  void scan_operator() {
    const SourcePos start = pos_;
    const std::size_t first = index_;
    const std::string_view g = advance();
    const std::string_view next = peek();
    auto two = [&](TokenKind kind) {
      advance();
      emit(kind, slice(first), start);
    };
    if (g == "@") return void(emit(TokenKind::At, g, start));
    if (g == "(") return void(emit(TokenKind::LParen, g, start));
    if (g == ")") return void(emit(TokenKind::RParen, g, start));
    if (g == "[") return void(emit(TokenKind::LBracket, g, start));
    if (g == "]") return void(emit(TokenKind::RBracket, g, start));
    if (g == ",") return void(emit(TokenKind::Comma, g, start));
    if (g == ";") return void(emit(TokenKind::Semicolon, g, start));
    if (g == "+") return void(emit(TokenKind::Plus, g, start));
    if (g == "-") return void(emit(TokenKind::Minus, g, start));
    if (g == "*") return void(emit(TokenKind::Star, g, start));
    if (g == "/") return void(emit(TokenKind::Slash, g, start));
    if (g == "=") {
      if (next == "=") return two(TokenKind::Eq);
      return void(emit(TokenKind::Assign, g, start));
    }
    if (g == "!" && next == "=") return two(TokenKind::Neq);
    if (g == "<") {
      if (next == "=") return two(TokenKind::Lte);
      if (next == ">") return two(TokenKind::Neq);
      return void(emit(TokenKind::Lt, g, start));
    }
    if (g == ">") {
      if (next == "=") return two(TokenKind::Gte);
      return void(emit(TokenKind::Gt, g, start));
    }
    throw LexError("unexpected character '" + std::string(g) + "'", start);
  }

  std::string_view source_;
  std::vector<std::string_view> graphemes_;
  std::size_t index_ = 0;
  SourcePos pos_{1, 1};
  std::vector<Token> tokens_;
};

}  // namespace

std::string_view keyword_spelling(TokenKind kind) {
  for (const auto& entry : kKeywordTable) {
    if (entry.kind == kind) return entry.spelling;
  }
  return token_kind_name(kind);
}

bool is_identifier_char(std::string_view grapheme, IdentPosition position) {
  if (grapheme.empty()) return false;
  const auto cps = unicode::code_points(grapheme);
  const char32_t base = cps.front();
  if (cps.size() == 1) {
    if (is_ascii_letter(base) || base == '_') return true;
    if (position == IdentPosition::Tail && base >= '0' && base <= '9') return true;
  }
  if (!unicode::is_tamil_letter(base)) return false;
  for (std::size_t i = 1; i < cps.size(); ++i) {
    if (!unicode::is_tamil_mark(cps[i])) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view source) {
  if (!unicode::is_valid_utf8(source)) throw LexError("source is not valid UTF-8", {1, 1});
  return Scanner(source).run();
}

}  // namespace ezhil
