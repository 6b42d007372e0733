#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rr/word.hpp"

namespace rr {

using State = std::uint32_t;

/// Complete deterministic finite automaton.
///
/// The transition table is stored row-major: row q holds the successors of q
/// for each alphabet symbol in alphabet order. Construction validates every
/// invariant, so a Dfa value is always total and in range. Values are
/// immutable after construction.
class Dfa {
public:
  /// Throws MalformedInput if the alphabet has repeated or unsupported
  /// symbols, an index is out of range, or the table is not n*|alphabet|.
  Dfa(std::string alphabet, State state_count, State start, std::vector<State> accepting,
      std::vector<State> transitions);

  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  State state_count() const noexcept { return state_count_; }
  State start() const noexcept { return start_; }

  bool is_accepting(State q) const { return accepting_[q]; }
  /// Sorted.
  std::vector<State> accepting_states() const;

  /// Position of symbol in the alphabet, or npos.
  std::size_t symbol_index(char symbol) const noexcept { return alphabet_.find(symbol); }
  bool has_symbol(char symbol) const noexcept { return symbol_index(symbol) != std::string::npos; }

  State next_by_index(State q, std::size_t symbol) const { return table_[q * alphabet_.size() + symbol]; }
  /// Throws ForeignSymbol for symbols outside the alphabet.
  State next(State q, char symbol) const;
  /// Extended transition function.
  State run(State from, std::string_view w) const;

  bool is_binary() const noexcept { return alphabet_ == "01"; }

  bool operator==(const Dfa&) const = default;

private:
  std::string alphabet_;
  State state_count_;
  State start_;
  std::vector<bool> accepting_;
  std::vector<State> table_;
};

/// Line-based text format ("dfa v1" header). Errors carry the line number.
Dfa parse_dfa(std::string_view text);
/// Canonical text: transitions sorted by (state, symbol position).
std::string serialize(const Dfa& dfa);

bool accepts(const Dfa& dfa, std::string_view w);

/// Minimal DFA for {w}: the prefix chain of w plus one dead state.
Dfa singleton_dfa(std::string_view w, std::string alphabet = "01");

/// Prefix-tree automaton for a finite word set (not minimized).
Dfa finite_language_dfa(const WordList& words, std::string alphabet = "01");

/// Minimal complete DFA, states numbered in breadth-first order from the start
/// state, successors visited in alphabet order.
Dfa minimize(const Dfa& dfa);

std::vector<bool> accessible_states(const Dfa& dfa);
std::vector<bool> coaccessible_states(const Dfa& dfa);

struct TrimResult {
  /// Accessible and coaccessible states in original relative order, followed
  /// by a single dead sink.
  Dfa dfa;
  std::vector<State> accessible;
  std::vector<State> coaccessible;
};

TrimResult trim(const Dfa& dfa);

bool is_finite(const Dfa& dfa);

/// Every accepted word, length-lexicographic. Throws InfiniteLanguage.
WordList enumerate_language(const Dfa& dfa);

/// The accepted word if the language has exactly one element.
std::optional<Word> unique_word(const Dfa& dfa);

struct PumpDecomposition {
  Word head;
  Word loop;
  Word tail;

  Word pumped(std::size_t k) const;
  bool operator==(const PumpDecomposition&) const = default;
};

/// head loop^k tail is accepted for every k. Throws FiniteLanguage.
PumpDecomposition pump_decomposition(const Dfa& dfa);

/// Makes accepting every state that reaches an accepting state by '#'
/// symbols alone, then drops the '#' column. Throws NoHashSymbol.
Dfa absorb_hash_suffix(const Dfa& dfa);

/// Length-lex least word leading from `from` to a state satisfying `target`.
/// With nonempty set the empty word is not considered.
template <class Pred>
std::optional<Word> shortest_word(const Dfa& dfa, State from, Pred target, bool nonempty = false);

}  // namespace rr

#include "rr/detail/shortest_word.hpp"
