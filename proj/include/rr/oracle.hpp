#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rr/automata.hpp"
#include "rr/word.hpp"

namespace rr {

/// A decidable language X over {0,1} with total membership.
class LanguageSpec {
public:
  enum class Builtin { Parity1, All, None };

  static LanguageSpec finite(WordList words);
  /// Throws NotBinaryAlphabet unless the alphabet is exactly "01".
  static LanguageSpec by_dfa(Dfa dfa);
  static LanguageSpec builtin(Builtin which);

  /// CLI syntax: finite:w1,w2,... ('@' is the empty word, 'finite:' alone is
  /// the empty set), dfa:<path>, parity1, all, none. Throws MalformedInput.
  static LanguageSpec parse(std::string_view text);

  bool contains(std::string_view w) const;
  std::string describe() const;

private:
  using Repr = std::variant<WordList, Dfa, Builtin>;
  explicit LanguageSpec(Repr repr) : repr_(std::move(repr)) {}
  Repr repr_;
};

/// Throws ForeignSymbol for non-binary words.
bool lang_member(const LanguageSpec& language, std::string_view w);

/// Which filter an RR instance is asked about.
///
///   RawD            D itself
///   FlatUniversal   complement of ex(X-bar)
///   PrefixUniversal complement of ex(X-bar){0,1}*, prefix closed
///   LiteralDex      complement of ex(X-bar) and of D{0,1}+
class FilterKind {
public:
  enum class Kind { RawD, FlatUniversal, PrefixUniversal, LiteralDex };

  static FilterKind raw_d() { return FilterKind(Kind::RawD, std::nullopt); }
  static FilterKind flat(LanguageSpec x) { return FilterKind(Kind::FlatUniversal, std::move(x)); }
  static FilterKind prefix(LanguageSpec x) { return FilterKind(Kind::PrefixUniversal, std::move(x)); }
  static FilterKind literal_dex(LanguageSpec x) { return FilterKind(Kind::LiteralDex, std::move(x)); }

  Kind kind() const noexcept { return kind_; }
  const LanguageSpec& language() const { return *language_; }

private:
  FilterKind(Kind kind, std::optional<LanguageSpec> language) : kind_(kind), language_(std::move(language)) {}
  Kind kind_;
  std::optional<LanguageSpec> language_;
};

bool filter_member(const FilterKind& filter, std::string_view w);

/// Exact truth of "L(A) meets the filter", decided without the query-list
/// machinery of the backward reductions. Throws NotBinaryAlphabet.
bool decide_reg_exact(const Dfa& dfa, const FilterKind& filter);

/// Every accepted word has a prefix in D, decided by walking the prefix tree
/// of the bounded candidate set {ex(x) : |x|^2 + 3 < n}.
bool language_within_d_ext(const Dfa& dfa);

/// Length-lex least accepted word of length <= max_len in the filter.
std::optional<Word> bounded_witness(const Dfa& dfa, const FilterKind& filter, std::size_t max_len);

}  // namespace rr
