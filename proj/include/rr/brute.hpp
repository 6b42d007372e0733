#pragma once

// Exhaustive reference procedures. They enumerate words directly and share
// no search code with the library routines they are compared against.

#include <cstddef>
#include <optional>
#include <set>

#include "rr/automata.hpp"
#include "rr/word.hpp"

namespace rr::brute {

/// Every word over the alphabet of length <= max_len, length-lex.
WordList words_up_to(const std::string& alphabet, std::size_t max_len);

/// Accepted words of length <= max_len, length-lex, by direct simulation.
WordList accepted_up_to(const Dfa& dfa, std::size_t max_len);

/// Agreement of two automata on every word of length <= max_len.
bool same_language_up_to(const Dfa& a, const Dfa& b, std::size_t max_len);

/// Infinite iff some accepted word has length in [n, 2n - 1].
bool infinite_by_band(const Dfa& dfa);

/// The set {ex(x) : |x| <= max_param}, built straight from the definition.
class DTable {
public:
  explicit DTable(std::size_t max_param);
  std::size_t max_param() const noexcept { return max_param_; }
  /// Valid for words up to the longest table entry.
  bool in_d(const Word& w) const { return words_.count(w) > 0; }
  /// Some prefix of w is a table entry.
  bool has_d_prefix(const Word& w) const;
  /// The table entry that is a prefix of w, if any.
  std::optional<Word> d_prefix(const Word& w) const;

private:
  std::size_t max_param_;
  std::set<Word> words_;
};

/// States pairs (a, b) reachable from (p, q) by reading one word on both
/// sides, via closure of the one-step pair relation as a boolean matrix.
std::vector<std::vector<bool>> pair_reachability(const Dfa& dfa);

/// {w over the non-# symbols : w #^k accepted for some k <= max_k}.
bool hash_closure_accepts(const Dfa& dfa, const Word& w, std::size_t max_k);

}  // namespace rr::brute
