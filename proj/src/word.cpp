#include "rr/word.hpp"

#include <algorithm>

#include "rr/error.hpp"

namespace rr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ForeignSymbol: return "ForeignSymbol";
    case ErrorCode::InfiniteLanguage: return "InfiniteLanguage";
    case ErrorCode::FiniteLanguage: return "FiniteLanguage";
    case ErrorCode::NoHashSymbol: return "NoHashSymbol";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::EmptySecondComponent: return "EmptySecondComponent";
    case ErrorCode::BlockTooSmall: return "BlockTooSmall";
    case ErrorCode::NotBinaryAlphabet: return "NotBinaryAlphabet";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

void canonicalize(WordList& words) {
  std::sort(words.begin(), words.end(), LengthLexLess{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool is_binary(std::string_view w) noexcept {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

void require_binary(std::string_view w) {
  if (!is_binary(w)) throw Error(ErrorCode::ForeignSymbol, "word '" + std::string(w) + "' is not binary");
}

Word parse_cli_word(std::string_view text) {
  if (text == "@") return {};
  return Word(text);
}

std::string cli_spelling(std::string_view w) { return w.empty() ? std::string("@") : std::string(w); }

WordList binary_words_of_length(std::size_t n) {
  WordList out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Word w(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> (n - 1 - i) & 1) w[i] = '1';
    out.push_back(std::move(w));
  }
  return out;
}

WordList binary_words_up_to(std::size_t n) {
  WordList out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = binary_words_of_length(len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace rr
