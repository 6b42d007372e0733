#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rr/automata.hpp"
#include "rr/oracle.hpp"
#include "rr/word.hpp"

namespace rr {

/// Output of a disjunctive reduction: either always-true, or a finite list
/// of query words of which at least one must be in X.
class QueryList {
public:
  static QueryList trivially_positive() { return QueryList(true, {}); }
  /// Sorts and deduplicates. Throws ForeignSymbol for non-binary words.
  static QueryList queries(WordList words);

  bool is_trivially_positive() const noexcept { return trivial_; }
  const WordList& words() const noexcept { return words_; }

  bool operator==(const QueryList&) const = default;

private:
  QueryList(bool trivial, WordList words) : trivial_(trivial), words_(std::move(words)) {}
  bool trivial_;
  WordList words_;
};

enum class ReductionVariant { Flat, Prefix };

/// x -> minimal DFA for {ex(x)}. The prefix variant is the same map, since
/// dex(0x) = ex(x).
Dfa forward_reduction(std::string_view x);

/// Trivially positive unless L(A) is a finite subset of D; otherwise the
/// decoded words ex^{-1}(L(A)).
QueryList backward_flat(const Dfa& dfa);

/// Trivially positive unless every accepted word has a D prefix; otherwise
/// the decoded D prefixes of accepted words.
QueryList backward_prefix(const Dfa& dfa);

QueryList backward(const Dfa& dfa, ReductionVariant variant);

/// "trivial\n", or "queries\n" followed by #w1#w2#...#wn# and a newline.
std::string encode_query_list(const QueryList& list);
/// Throws MalformedInput.
QueryList decode_query_list(std::string_view text);

/// Disjunction of disjunctions.
QueryList flatten(const std::vector<QueryList>& lists);

bool eval_dtt(const QueryList& list, const LanguageSpec& language);

}  // namespace rr
