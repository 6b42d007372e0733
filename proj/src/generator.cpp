#include "rr/generator.hpp"

#include "rr/coding.hpp"
#include "rr/error.hpp"

namespace rr {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

Word Rng::binary_word(std::size_t length) {
  Word w(length, '0');
  for (char& c : w)
    if (below(2)) c = '1';
  return w;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  // FNV-1a over the name, folded into the seed through a splitmix step.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Dfa ex_word_tail_dfa(std::string_view x) {
  const Word w = ex_encode(x);
  const Dfa chain = singleton_dfa(w);
  std::vector<State> table;
  for (State q = 0; q < chain.state_count(); ++q)
    for (std::size_t a = 0; a < 2; ++a) table.push_back(chain.next_by_index(q, a));
  const State last = static_cast<State>(w.size());
  table[std::size_t{last} * 2 + 0] = last;
  return minimize(Dfa("01", chain.state_count(), 0, {last}, std::move(table)));
}

Dfa beta_cycle_dfa(std::string_view head, std::string_view cycle) {
  if (cycle.empty()) throw Error(ErrorCode::BadConfig, "beta cycle needs a nonempty cycle word");
  const Word h = beta_encode(head);
  const Word c = beta_encode(cycle);
  // 0..|h| spell h, |h|+1 .. |h|+|c|-1 spell c back to |h|, then a dead state.
  const State anchor = static_cast<State>(h.size());
  const State n = static_cast<State>(h.size() + c.size() + 1);
  const State dead = n - 1;
  std::vector<State> table(std::size_t{n} * 2, dead);
  for (std::size_t i = 0; i < h.size(); ++i) table[i * 2 + (h[i] == '1')] = static_cast<State>(i + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const State from = i == 0 ? anchor : static_cast<State>(anchor + i);
    const State to = i + 1 == c.size() ? anchor : static_cast<State>(anchor + i + 1);
    table[std::size_t{from} * 2 + (c[i] == '1')] = to;
  }
  return minimize(Dfa("01", n, 0, {anchor}, std::move(table)));
}

Dfa random_dfa(const GeneratorConfig& config) {
  if (config.max_states < 2) throw Error(ErrorCode::BadConfig, "max_states must be at least 2");
  if (config.accept_probability.denominator == 0 ||
      config.accept_probability.numerator > config.accept_probability.denominator)
    throw Error(ErrorCode::BadConfig, "accept probability must lie in [0, 1]");
  if (config.alphabet != "01" && config.alphabet != "01#")
    throw Error(ErrorCode::BadConfig, "alphabet must be 01 or 01#");

  Rng rng(config.seed);
  switch (config.family) {
    case Family::Random: {
      const State n = static_cast<State>(rng.between(1, config.max_states));
      const std::size_t k = config.alphabet.size();
      std::vector<State> table(std::size_t{n} * k);
      for (State& r : table) r = static_cast<State>(rng.below(n));
      std::vector<State> accepting;
      for (State q = 0; q < n; ++q)
        if (rng.chance(config.accept_probability.numerator, config.accept_probability.denominator))
          accepting.push_back(q);
      return Dfa(config.alphabet, n, 0, std::move(accepting), std::move(table));
    }
    case Family::UnionOfSingletons: {
      WordList words = config.words;
      if (words.empty())
        for (std::size_t length : config.word_lengths) words.push_back(ex_encode(rng.binary_word(length)));
      return minimize(finite_language_dfa(words, config.alphabet));
    }
    case Family::ExWordTail:
      if (config.words.size() != 1) throw Error(ErrorCode::BadConfig, "ex-tail takes exactly one word");
      return ex_word_tail_dfa(config.words[0]);
    case Family::BetaCycle:
      if (config.words.size() != 2) throw Error(ErrorCode::BadConfig, "beta-cycle takes a head and a cycle word");
      return beta_cycle_dfa(config.words[0], config.words[1]);
  }
  throw Error(ErrorCode::BadConfig, "unknown family");
}

}  // namespace rr
