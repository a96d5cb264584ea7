#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "ezhil/token.hpp"

namespace ezhil {

struct KeywordEntry {
  std::string_view spelling;
  TokenKind kind;
};

/// Tamil keyword spellings. Lookup happens after a maximal identifier run
/// has been scanned, so a keyword is only recognised as a whole word.
/// Aliases may be appended without touching the scanner.
inline constexpr std::array kKeywordTable{
    KeywordEntry{"நேருத்து", TokenKind::Break},
    KeywordEntry{"பின்கொடு", TokenKind::Return},
    KeywordEntry{"செய்", TokenKind::Do},
    KeywordEntry{"ஆக", TokenKind::For},
    KeywordEntry{"தேர்ந்தெடு", TokenKind::Select},
    KeywordEntry{"முடியேனில்", TokenKind::Until},
    KeywordEntry{"ஆனால்", TokenKind::If},
    KeywordEntry{"தேர்வு", TokenKind::Case},
    KeywordEntry{"பதிப்பி", TokenKind::Print},
    KeywordEntry{"இல்லைஆனால்", TokenKind::ElseIf},
    KeywordEntry{"ஏதேனில்", TokenKind::Otherwise},
    KeywordEntry{"நிரல்பாகம்", TokenKind::Function},
    KeywordEntry{"இல்லை", TokenKind::Else},
    KeywordEntry{"வரை", TokenKind::While},
    KeywordEntry{"முடி", TokenKind::End},
    KeywordEntry{"தொடர்", TokenKind::Continue},
};

/// Canonical spelling of a keyword kind (first table entry for that kind).
std::string_view keyword_spelling(TokenKind kind);

enum class IdentPosition { Head, Tail };

/// Whether one grapheme cluster may appear in an identifier. Heads accept
/// Tamil letters (with their vowel signs or pulli), ASCII letters and '_';
/// tails also accept ASCII digits.
bool is_identifier_char(std::string_view grapheme, IdentPosition position);

/// Throws LexError on unterminated strings, malformed numbers, characters
/// outside the accepted alphabet, and invalid UTF-8.
std::vector<Token> tokenize(std::string_view source);

}  // namespace ezhil
