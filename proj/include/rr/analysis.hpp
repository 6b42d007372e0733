#pragma once

#include <cstdint>
#include <optional>

#include "rr/automata.hpp"
#include "rr/word.hpp"

namespace rr {

/// Parameters of a square search: find u with delta(s, u) = mid and
/// delta(mid, u) = end.
struct SquareQuery {
  State mid = 0;
  State end = 0;
  /// Exact |u|; unset means any length (bounded by the prefix ceiling when
  /// half_constraint is set).
  std::optional<std::uint32_t> length;
  /// Require u = beta(x) 11 0^{|x|^2+3}.
  bool half_constraint = false;
};

/// Largest meaningful |u| when enumerating D prefixes of accepted words:
/// n + 2 ceil(sqrt(n)) + 5.
std::uint32_t prefix_length_ceiling(State state_count);

/// Largest |x| of a D prefix that can occur when every accepted word has a D
/// prefix: the largest l with l^2 + 3 < n. Empty when n <= 3.
std::optional<std::uint32_t> max_prefix_parameter(State state_count);

/// Length-lex least witness, or nothing. Throws NotBinaryAlphabet, and
/// MalformedInput for out-of-range states.
std::optional<Word> square_reach(const Dfa& dfa, const SquareQuery& query);

/// L(A) is finite and contained in D.
bool finite_and_subset_d(const Dfa& dfa);

/// Every accepted word has a prefix in D.
bool subset_dext(const Dfa& dfa);

/// ex^{-1}(L(A)), length-lex. Throws PreconditionFailed unless
/// finite_and_subset_d holds.
WordList enumerate_d_words(const Dfa& dfa);

/// ex^{-1} of the D words that are prefixes of accepted words, length-lex.
/// Throws PreconditionFailed unless subset_dext holds.
WordList enumerate_d_prefixes(const Dfa& dfa);

/// An accepted word outside D, found by pumping. Throws FiniteLanguage.
Word witness_outside_d(const Dfa& dfa);

/// Throws NotBinaryAlphabet unless the alphabet is exactly {0, 1}.
void require_binary_alphabet(const Dfa& dfa);

}  // namespace rr
