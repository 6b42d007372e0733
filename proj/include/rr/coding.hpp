#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "rr/word.hpp"

namespace rr {

/// Symbol-wise morphism 0 -> 01, 1 -> 10.
Word beta_encode(std::string_view x);
/// Throws NotInImage unless w is a concatenation of 01 and 10 pairs.
Word beta_decode(std::string_view w);

/// Length of ex(x) for |x| = n: 2n^2 + 4n + 10.
constexpr std::uint64_t d_length(std::uint64_t n) { return 2 * n * n + 4 * n + 10; }
/// Length of one half of ex(x) for |x| = n.
constexpr std::uint64_t half_length(std::uint64_t n) { return n * n + 2 * n + 5; }
/// Zero run closing a half.
constexpr std::uint64_t zero_run_length(std::uint64_t n) { return n * n + 3; }

/// n with half_length(n) == length, if any.
std::optional<std::uint64_t> half_parameter(std::uint64_t length);

/// ex(x) = h h with h = beta(x) 11 0^{|x|^2+3}.
Word ex_encode(std::string_view x);
/// x with ex(x) = w, or nothing when w is not in D.
std::optional<Word> ex_decode(std::string_view w);
inline bool in_d(std::string_view w) { return ex_decode(w).has_value(); }

/// One-way recognizer for halves beta(x) 11 0^{|x|^2+3}.
///
/// Reads pairs while they are 01/10, switches to counting zeros on the first
/// 11 pair at an even position, fails on a 00 pair, a 1 among the zeros, or
/// too many zeros. The state is small enough to be part of a search key.
class HalfWordScanner {
public:
  enum class Phase : std::uint8_t { Pairs, PairsPending0, PairsPending1, Zeros, Reject };

  void feed(char symbol);
  void feed(std::string_view w) {
    for (char c : w) feed(c);
  }

  Phase phase() const noexcept { return phase_; }
  /// Number of complete 01/10 pairs read so far (= |x|).
  std::uint32_t pairs() const noexcept { return pairs_; }
  std::uint32_t zeros() const noexcept { return zeros_; }
  bool rejected() const noexcept { return phase_ == Phase::Reject; }
  /// The input read so far is exactly a half.
  bool accepts() const noexcept { return phase_ == Phase::Zeros && zeros_ == zero_run_length(pairs_); }

  /// Packs the full state into one integer (distinct states, distinct keys).
  std::uint64_t key() const noexcept {
    return (std::uint64_t{static_cast<std::uint8_t>(phase_)} << 56) | (std::uint64_t{pairs_} << 28) | zeros_;
  }

  bool operator==(const HalfWordScanner&) const = default;

private:
  Phase phase_ = Phase::Pairs;
  std::uint32_t pairs_ = 0;
  std::uint32_t zeros_ = 0;
};

bool is_half_word(std::string_view w);

/// Splits w = u v with u in D. The D prefix of a word is unique when it exists.
std::optional<std::pair<Word, Word>> split_d_prefix(std::string_view w);
inline bool in_d_ext(std::string_view w) { return split_d_prefix(w).has_value(); }

/// w is a prefix of some word of D (including words of D themselves).
bool is_prefix_of_d_word(std::string_view w);

// ---------------------------------------------------------------------------
// Pairing bijection {0,1}* -> {0,1}* x ({0,1}* \ {eps}).
//
// Words are ranked length-lexicographically (eps -> 0, 0 -> 1, 1 -> 2,
// 00 -> 3, ...), nonempty words by rank - 1, and ranks are paired with the
// Cantor function c(a, b) = (a + b)(a + b + 1)/2 + b.

std::pair<Word, Word> pair_split(std::string_view w);
/// Throws EmptySecondComponent when second is empty.
Word pair_join(std::string_view first, std::string_view second);

/// phi(x, a y) = beta(x) a a y. Throws EmptySecondComponent.
Word phi_encode(std::string_view x, std::string_view second);
/// Throws NotInImage when w has no 00/11 pair at an even position before a
/// non-pair tail.
std::pair<Word, Word> phi_decode(std::string_view w);

/// Injection of {0,1}* onto the complement of a finite excluded set.
///
/// Words of the excluded set map to 1 kappa(x), words 0^i 1 m with m marked
/// shift to 0^{i+1} 1 m, everything else is fixed.
class CofiniteBijection {
public:
  /// Block length is 1 + max(longest excluded word, ceil(log2(|excluded|+1)));
  /// marked words are the |excluded| lexicographically smallest of that
  /// length, paired with the excluded words in length-lex order.
  /// Throws BlockTooSmall if no such block exists, ForeignSymbol for
  /// non-binary words.
  explicit CofiniteBijection(WordList excluded);

  const WordList& excluded() const noexcept { return excluded_; }
  const WordList& marked() const noexcept { return marked_; }
  std::size_t block_length() const noexcept { return block_length_; }

  Word apply(std::string_view x) const;
  /// Throws NotInImage for excluded words.
  Word invert(std::string_view y) const;

private:
  std::optional<std::size_t> marked_index(std::string_view m) const;
  std::optional<std::size_t> excluded_index(std::string_view x) const;

  WordList excluded_;
  WordList marked_;
  std::size_t block_length_ = 0;
};

/// dex: eps -> eps, 0x -> ex(x), 1x -> ex(pi1(x)) pi2(x).
Word dex_encode(std::string_view x);
/// Throws NotInImage when w is nonempty and has no D prefix.
Word dex_decode(std::string_view w);

}  // namespace rr
