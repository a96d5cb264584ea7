#include "ezhil/unicode.hpp"

#include <unicode/brkiter.h>
#include <unicode/uchar.h>
#include <unicode/utext.h>

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace ezhil::unicode {
namespace {

int sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

icu::BreakIterator& character_iterator() {
  thread_local std::unique_ptr<icu::BreakIterator> iter = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
    if (U_FAILURE(status) || !it) {
      throw std::runtime_error("ICU character break iterator unavailable");
    }
    return it;
  }();
  return *iter;
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    const int len = sequence_length(lead);
    if (len == 0 || i + len > text.size()) return false;
    char32_t cp = len == 1 ? lead : lead & (0x7F >> len);
    for (int k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range values.
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

char32_t first_code_point(std::string_view text) {
  const auto lead = static_cast<unsigned char>(text.front());
  const int len = std::max(1, sequence_length(lead));
  char32_t cp = len == 1 ? lead : lead & (0x7F >> len);
  for (int k = 1; k < len && k < static_cast<int>(text.size()); ++k) {
    cp = (cp << 6) | (static_cast<unsigned char>(text[k]) & 0x3F);
  }
  return cp;
}

std::vector<char32_t> code_points(std::string_view text) {
  std::vector<char32_t> out;
  while (!text.empty()) {
    out.push_back(first_code_point(text));
    const auto len = static_cast<std::size_t>(
        std::max(1, sequence_length(static_cast<unsigned char>(text.front()))));
    text.remove_prefix(std::min(len, text.size()));
  }
  return out;
}

std::vector<std::string_view> graphemes(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;

  UErrorCode status = U_ZERO_ERROR;
  UText* ut = utext_openUTF8(nullptr, text.data(), static_cast<int64_t>(text.size()), &status);
  if (U_FAILURE(status)) throw std::runtime_error("utext_openUTF8 failed");
  std::unique_ptr<UText, decltype(&utext_close)> guard(ut, &utext_close);

  auto& iter = character_iterator();
  iter.setText(ut, status);
  if (U_FAILURE(status)) throw std::runtime_error("BreakIterator::setText failed");

  // With a UTF-8 UText, boundaries are native (byte) indexes.
  int32_t start = iter.first();
  for (int32_t end = iter.next(); end != icu::BreakIterator::DONE; end = iter.next()) {
    out.push_back(text.substr(static_cast<std::size_t>(start),
                              static_cast<std::size_t>(end - start)));
    start = end;
  }
  // Detach so the thread_local iterator never holds a dangling UText.
  UText* empty = utext_openUTF8(nullptr, "", 0, &status);
  iter.setText(empty, status);
  utext_close(empty);
  return out;
}

std::size_t grapheme_count(std::string_view text) { return graphemes(text).size(); }

std::strong_ordering compare_graphemes(std::string_view lhs, std::string_view rhs) {
  const auto a = graphemes(lhs);
  const auto b = graphemes(rhs);
  return std::lexicographical_compare_three_way(
      a.begin(), a.end(), b.begin(), b.end(), [](std::string_view x, std::string_view y) {
        const auto cx = code_points(x);
        const auto cy = code_points(y);
        return std::lexicographical_compare_three_way(cx.begin(), cx.end(), cy.begin(),
                                                      cy.end());
      });
}

bool is_tamil_letter(char32_t cp) {
  return cp >= 0x0B80 && cp <= 0x0BFF && u_charType(static_cast<UChar32>(cp)) == U_OTHER_LETTER;
}

bool is_tamil_mark(char32_t cp) {
  if (cp < 0x0B80 || cp > 0x0BFF) return false;
  const auto type = u_charType(static_cast<UChar32>(cp));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK;
}

}  // namespace ezhil::unicode
