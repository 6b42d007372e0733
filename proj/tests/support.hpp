#pragma once

#include <string>
#include <vector>

#include "rr/automata.hpp"
#include "rr/coding.hpp"
#include "rr/generator.hpp"

namespace rr::test {

// 0*
inline Dfa zero_star() { return Dfa("01", 2, 0, {0}, {0, 1, 1, 1}); }

// 0*1
inline Dfa zero_star_one() { return Dfa("01", 3, 0, {1}, {0, 1, 2, 2, 2, 2}); }

// (01)*
inline Dfa zero_one_star() { return Dfa("01", 3, 0, {0}, {1, 2, 2, 0, 2, 2}); }

// Nothing.
inline Dfa empty_language() { return Dfa("01", 1, 0, {}, {0, 0}); }

// Words whose length is 1 mod 7.
inline Dfa length_one_mod_seven() {
  std::vector<State> table;
  for (State q = 0; q < 7; ++q) {
    table.push_back((q + 1) % 7);
    table.push_back((q + 1) % 7);
  }
  return Dfa("01", 7, 0, {1}, std::move(table));
}

inline Dfa union_of(const WordList& words) { return minimize(finite_language_dfa(words)); }

inline Dfa random_small(std::uint64_t seed, std::uint32_t max_states, std::string alphabet = "01",
                        Probability p = {1, 3}) {
  GeneratorConfig config;
  config.seed = seed;
  config.max_states = max_states;
  config.alphabet = std::move(alphabet);
  config.accept_probability = p;
  return random_dfa(config);
}

}  // namespace rr::test
