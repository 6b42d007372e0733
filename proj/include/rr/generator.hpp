#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "rr/automata.hpp"
#include "rr/word.hpp"

namespace rr {

/// Seeded generator with a portable bounded draw (standard distributions
/// are implementation-defined, which would make reports platform-dependent).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }
  Word binary_word(std::size_t length);

private:
  std::mt19937_64 engine_;
};

/// Independent stream for a named task.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

struct Probability {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 2;
};

enum class Family {
  Random,            // uniform transitions, raw (not minimized)
  UnionOfSingletons, // union of singleton languages of `words`
  ExWordTail,        // ex(words[0]) 0*
  BetaCycle,         // beta(words[0]) beta(words[1])*
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::uint32_t max_states = 4;
  Probability accept_probability;
  std::string alphabet = "01";
  Family family = Family::Random;
  WordList words;
  /// UnionOfSingletons with no explicit words: draw a random x of each
  /// length and use ex(x).
  std::vector<std::size_t> word_lengths;
};

/// Deterministic in the config. Structured families are minimized. Throws
/// BadConfig.
Dfa random_dfa(const GeneratorConfig& config);

/// Minimal DFA for ex(x) 0*.
Dfa ex_word_tail_dfa(std::string_view x);
/// Minimal DFA for beta(head) beta(cycle)*; cycle must be nonempty.
Dfa beta_cycle_dfa(std::string_view head, std::string_view cycle);

}  // namespace rr
