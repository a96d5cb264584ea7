#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

namespace ezhil::unicode {

bool is_valid_utf8(std::string_view text);

// Decodes the code point starting at text[0]. text must be nonempty valid UTF-8.
char32_t first_code_point(std::string_view text);

std::vector<char32_t> code_points(std::string_view text);

// Splits valid UTF-8 into extended grapheme clusters. The views point into `text`.
std::vector<std::string_view> graphemes(std::string_view text);

std::size_t grapheme_count(std::string_view text);

// Lexicographic order over grapheme clusters; each cluster compares by code points.
std::strong_ordering compare_graphemes(std::string_view lhs, std::string_view rhs);

bool is_tamil_letter(char32_t cp);
bool is_tamil_mark(char32_t cp);

}  // namespace ezhil::unicode
