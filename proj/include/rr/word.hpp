#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rr {

/// A finite word. Symbols are the characters '0', '1' and '#'; the empty
/// string is the empty word.
using Word = std::string;
using WordList = std::vector<Word>;

/// Shorter words first; equal lengths compare bytewise.
struct LengthLexLess {
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline bool length_lex_less(std::string_view a, std::string_view b) noexcept {
  return LengthLexLess{}(a, b);
}

/// Sorts length-lexicographically and removes duplicates in place.
void canonicalize(WordList& words);

bool is_binary(std::string_view w) noexcept;

/// Throws ForeignSymbol unless every symbol of w is '0' or '1'.
void require_binary(std::string_view w);

/// Command-line spelling: "@" is the empty word, anything else is literal.
Word parse_cli_word(std::string_view text);
std::string cli_spelling(std::string_view w);

/// All binary words of length exactly n, in lexicographic order.
WordList binary_words_of_length(std::size_t n);

/// All binary words of length at most n, length-lexicographic.
WordList binary_words_up_to(std::size_t n);

}  // namespace rr
