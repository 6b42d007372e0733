#include "rr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_set>

#include "rr/coding.hpp"
#include "rr/error.hpp"

namespace rr {

namespace {

constexpr std::size_t no_parent = ~std::size_t{0};

// Breadth-first search over an implicit configuration graph. `expand` emits
// (symbol, successor) pairs in symbol order; the word returned spells the
// symbols along the first path that reaches a target, which is the
// length-lex least one.
template <class Config, class Expand, class Target>
std::optional<Word> breadth_first(const Config& origin, Expand expand, Target target) {
  if (target(origin)) return Word{};
  struct Node {
    Config config;
    std::size_t parent;
    char symbol;
  };
  std::vector<Node> nodes{{origin, no_parent, 0}};
  std::unordered_set<Config, typename Config::Hash> seen{origin};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Config current = nodes[i].config;
    std::size_t hit = no_parent;
    expand(current, [&](char symbol, const Config& next) {
      if (hit != no_parent || !seen.insert(next).second) return;
      nodes.push_back({next, i, symbol});
      if (target(next)) hit = nodes.size() - 1;
    });
    if (hit != no_parent) {
      Word w;
      for (std::size_t j = hit; nodes[j].parent != no_parent; j = nodes[j].parent) w.push_back(nodes[j].symbol);
      return Word(w.rbegin(), w.rend());
    }
  }
  return std::nullopt;
}

inline std::size_t mix(std::size_t seed, std::uint64_t value) {
  return seed ^ (std::hash<std::uint64_t>{}(value) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void require_state(const Dfa& dfa, State q) {
  if (q >= dfa.state_count())
    throw Error(ErrorCode::MalformedInput, "state " + std::to_string(q) + " out of range");
}

std::vector<bool> single_state(const Dfa& dfa, State q) {
  std::vector<bool> mask(dfa.state_count(), false);
  mask[q] = true;
  return mask;
}

std::vector<bool> accepting_mask(const Dfa& dfa) {
  std::vector<bool> mask(dfa.state_count(), false);
  for (State q = 0; q < dfa.state_count(); ++q) mask[q] = dfa.is_accepting(q);
  return mask;
}

// States from which some state of `targets` is reachable.
std::vector<bool> states_reaching(const Dfa& dfa, const std::vector<bool>& targets) {
  const State n = dfa.state_count();
  std::vector<std::vector<State>> reverse(n);
  for (State q = 0; q < n; ++q)
    for (std::size_t s = 0; s < dfa.alphabet_size(); ++s) reverse[dfa.next_by_index(q, s)].push_back(q);
  std::vector<bool> reached = targets;
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (reached[q]) stack.push_back(q);
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State p : reverse[q])
      if (!reached[p]) {
        reached[p] = true;
        stack.push_back(p);
      }
  }
  return reached;
}

enum class HalfMode : std::uint8_t { Ignore, Require, Forbid };

// Two simulations of A reading the same word u, one from the start state and
// one from `mid`, with an optional length counter and half-word scanner.
struct SquareConfig {
  State a = 0;
  State b = 0;
  std::uint32_t length = 0;
  HalfWordScanner scanner;

  bool operator==(const SquareConfig&) const = default;
  struct Hash {
    std::size_t operator()(const SquareConfig& c) const noexcept {
      return mix(mix(mix(0, c.a), (std::uint64_t{c.b} << 32) | c.length), c.scanner.key());
    }
  };
};

struct SquareSearch {
  State mid = 0;
  const std::vector<bool>* end = nullptr;
  std::optional<std::uint32_t> exact_length;
  std::optional<std::uint32_t> max_length;
  HalfMode half = HalfMode::Ignore;
};

std::optional<Word> square_search(const Dfa& dfa, const SquareSearch& search) {
  const bool track_length = search.exact_length || search.max_length;
  const std::uint32_t bound = search.exact_length ? *search.exact_length : search.max_length.value_or(0);
  if (search.half == HalfMode::Require && search.exact_length && !half_parameter(*search.exact_length))
    return std::nullopt;

  // Configurations from which the target is unreachable are never expanded.
  const auto to_mid = states_reaching(dfa, single_state(dfa, search.mid));
  const auto to_end = states_reaching(dfa, *search.end);
  SquareConfig origin{dfa.start(), search.mid, 0, {}};
  if (!to_mid[origin.a] || !to_end[origin.b]) return std::nullopt;
  auto target = [&](const SquareConfig& c) {
    if (c.a != search.mid || !(*search.end)[c.b]) return false;
    if (search.exact_length && c.length != *search.exact_length) return false;
    if (search.half == HalfMode::Require) return c.scanner.accepts();
    if (search.half == HalfMode::Forbid) return !c.scanner.accepts();
    return true;
  };
  auto expand = [&](const SquareConfig& c, auto&& emit) {
    if (track_length && c.length >= bound) return;
    for (std::size_t s = 0; s < dfa.alphabet_size(); ++s) {
      const char symbol = dfa.alphabet()[s];
      SquareConfig next{dfa.next_by_index(c.a, s), dfa.next_by_index(c.b, s), track_length ? c.length + 1 : 0,
                        c.scanner};
      if (!to_mid[next.a] || !to_end[next.b]) continue;
      if (search.half != HalfMode::Ignore) {
        next.scanner.feed(symbol);
        if (search.half == HalfMode::Require && next.scanner.rejected()) continue;
      }
      emit(symbol, next);
    }
  };
  // Symbols are emitted in alphabet order; the binary alphabet may be "10".
  if (dfa.alphabet() == "01") return breadth_first(origin, expand, target);
  return breadth_first(origin,
                       [&](const SquareConfig& c, auto&& emit) {
                         std::vector<std::pair<char, SquareConfig>> out;
                         expand(c, [&](char s, const SquareConfig& n) { out.emplace_back(s, n); });
                         std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
                         for (auto& [s, n] : out) emit(s, n);
                       },
                       target);
}

// Reading states (a, b) of u and v in lockstep, from the start state and
// from `mid`, remembering whether u and v differ somewhere.
struct PairConfig {
  State a = 0;
  State b = 0;
  std::uint8_t flag = 0;

  bool operator==(const PairConfig&) const = default;
  struct Hash {
    std::size_t operator()(const PairConfig& c) const noexcept {
      return mix(0, (std::uint64_t{c.a} << 33) | (std::uint64_t{c.b} << 1) | c.flag);
    }
  };
};

// Accepted word of even length 2k whose halves differ.
bool has_even_non_square(const Dfa& dfa) {
  const auto coacc = coaccessible_states(dfa);
  for (State q = 0; q < dfa.state_count(); ++q) {
    if (!coacc[q]) continue;
    const auto to_mid = states_reaching(dfa, single_state(dfa, q));
    auto found = breadth_first(
        PairConfig{dfa.start(), q, 0},
        [&](const PairConfig& c, auto&& emit) {
          for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t) {
              const State a = dfa.next_by_index(c.a, s);
              const State b = dfa.next_by_index(c.b, t);
              if (!to_mid[a] || !coacc[b]) continue;
              emit(dfa.alphabet()[s], PairConfig{a, b, static_cast<std::uint8_t>(c.flag | (s != t ? 1 : 0))});
            }
        },
        [&](const PairConfig& c) { return c.flag && c.a == q && dfa.is_accepting(c.b); });
    if (found) return true;
  }
  return false;
}

struct ParityConfig {
  State q = 0;
  std::uint8_t parity = 0;
  bool operator==(const ParityConfig&) const = default;
  struct Hash {
    std::size_t operator()(const ParityConfig& c) const noexcept { return mix(0, (std::uint64_t{c.q} << 1) | c.parity); }
  };
};

bool has_odd_length_word(const Dfa& dfa) {
  return breadth_first(
             ParityConfig{dfa.start(), 0},
             [&](const ParityConfig& c, auto&& emit) {
               for (std::size_t s = 0; s < dfa.alphabet_size(); ++s)
                 emit(dfa.alphabet()[s],
                      ParityConfig{dfa.next_by_index(c.q, s), static_cast<std::uint8_t>(c.parity ^ 1)});
             },
             [&](const ParityConfig& c) { return c.parity == 1 && dfa.is_accepting(c.q); })
      .has_value();
}

// One simulation of A alongside the half-word scanner on the same word.
struct ScanConfig {
  State q = 0;
  HalfWordScanner scanner;
  bool operator==(const ScanConfig&) const = default;
  struct Hash {
    std::size_t operator()(const ScanConfig& c) const noexcept { return mix(mix(0, c.q), c.scanner.key()); }
  };
};

// Accepted word whose scan fails before a half with at most `max_pairs`
// pairs completes, or that starts with more than `max_pairs` beta pairs.
bool has_word_failing_before_half(const Dfa& dfa, const std::vector<bool>& coacc,
                                  std::optional<std::uint32_t> max_pairs) {
  const std::uint32_t pair_limit = max_pairs ? *max_pairs + 1 : 0;
  auto fails = [&](const ScanConfig& c) {
    if (!coacc[c.q]) return false;
    if (c.scanner.rejected()) return true;
    if (c.scanner.pairs() >= pair_limit) return true;
    return dfa.is_accepting(c.q) && !c.scanner.accepts();
  };
  return breadth_first(
             ScanConfig{dfa.start(), {}},
             [&](const ScanConfig& c, auto&& emit) {
               if (!coacc[c.q] || c.scanner.rejected() || c.scanner.accepts() || c.scanner.pairs() >= pair_limit)
                 return;
               for (std::size_t s = 0; s < dfa.alphabet_size(); ++s) {
                 ScanConfig next{dfa.next_by_index(c.q, s), c.scanner};
                 next.scanner.feed(dfa.alphabet()[s]);
                 emit(dfa.alphabet()[s], next);
               }
             },
             fails)
      .has_value();
}

// u read from the start state (track a) and the continuation r read from the
// guessed midpoint (track b). Once r differs from u or ends early, track b is
// dropped.
struct ContinuationConfig {
  enum Flag : std::uint8_t { Equal, Differed, Ended };
  State a = 0;
  State b = 0;
  Flag flag = Equal;
  HalfWordScanner scanner;

  bool operator==(const ContinuationConfig&) const = default;
  struct Hash {
    std::size_t operator()(const ContinuationConfig& c) const noexcept {
      return mix(mix(0, (std::uint64_t{c.a} << 34) | (std::uint64_t{c.b} << 2) | c.flag), c.scanner.key());
    }
  };
};

// Accepted word u r with u a half (at most max_pairs pairs), delta(s, u) =
// mid, and r not starting with u.
bool has_broken_second_half(const Dfa& dfa, const std::vector<bool>& coacc, State mid, std::uint32_t max_pairs) {
  using C = ContinuationConfig;
  return breadth_first(
             C{dfa.start(), mid, C::Equal, {}},
             [&](const C& c, auto&& emit) {
               if (c.scanner.accepts()) return;
               for (std::size_t s = 0; s < 2; ++s) {
                 const char symbol = dfa.alphabet()[s];
                 HalfWordScanner scanner = c.scanner;
                 scanner.feed(symbol);
                 if (scanner.rejected() || scanner.pairs() > max_pairs) continue;
                 const State a = dfa.next_by_index(c.a, s);
                 if (c.flag != C::Equal) {
                   emit(symbol, C{a, 0, c.flag, scanner});
                   continue;
                 }
                 if (dfa.is_accepting(c.b)) emit(symbol, C{a, 0, C::Ended, scanner});
                 for (std::size_t t = 0; t < 2; ++t) {
                   const State b = dfa.next_by_index(c.b, t);
                   if (t == s)
                     emit(symbol, C{a, b, C::Equal, scanner});
                   else if (coacc[b])
                     emit(symbol, C{a, 0, C::Differed, scanner});
                 }
               }
             },
             [&](const C& c) { return c.flag != C::Equal && c.a == mid && c.scanner.accepts(); })
      .has_value();
}

// (q, k) such that some half of length k <= max_length leads from the start
// state to q.
std::set<std::pair<State, std::uint32_t>> half_endpoints(const Dfa& dfa, std::uint32_t max_length) {
  std::set<std::pair<State, std::uint32_t>> out;
  std::unordered_set<ScanConfig, ScanConfig::Hash> seen;
  std::vector<ScanConfig> stack{{dfa.start(), {}}};
  seen.insert(stack.back());
  while (!stack.empty()) {
    const ScanConfig c = stack.back();
    stack.pop_back();
    if (c.scanner.accepts()) {
      out.emplace(c.q, static_cast<std::uint32_t>(half_length(c.scanner.pairs())));
      continue;
    }
    for (std::size_t s = 0; s < dfa.alphabet_size(); ++s) {
      ScanConfig next{dfa.next_by_index(c.q, s), c.scanner};
      next.scanner.feed(dfa.alphabet()[s]);
      if (next.scanner.rejected() || half_length(next.scanner.pairs()) > max_length) continue;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return out;
}

}  // namespace

void require_binary_alphabet(const Dfa& dfa) {
  if (dfa.alphabet() != "01" && dfa.alphabet() != "10")
    throw Error(ErrorCode::NotBinaryAlphabet, "expected alphabet {0,1}, got " + dfa.alphabet());
}

std::uint32_t prefix_length_ceiling(State n) {
  std::uint32_t root = 0;
  while (std::uint64_t{root} * root < n) ++root;
  return n + 2 * root + 5;
}

std::optional<std::uint32_t> max_prefix_parameter(State n) {
  if (n <= 3) return std::nullopt;
  std::uint32_t l = 0;
  while (zero_run_length(l + 1) < n) ++l;
  return l;
}

std::optional<Word> square_reach(const Dfa& dfa, const SquareQuery& query) {
  require_binary_alphabet(dfa);
  require_state(dfa, query.mid);
  require_state(dfa, query.end);
  const auto end = single_state(dfa, query.end);
  SquareSearch search{query.mid, &end, query.length, std::nullopt,
                      query.half_constraint ? HalfMode::Require : HalfMode::Ignore};
  if (query.half_constraint && !query.length) search.max_length = prefix_length_ceiling(dfa.state_count());
  return square_search(dfa, search);
}

bool finite_and_subset_d(const Dfa& dfa) {
  require_binary_alphabet(dfa);
  if (!is_finite(dfa)) return false;
  if (has_odd_length_word(dfa)) return false;
  if (has_even_non_square(dfa)) return false;
  // All accepted words are squares uu with |uu| < n; look for one whose half
  // u is not beta(x) 11 0^{|x|^2+3}. Finiteness bounds the search without a
  // length counter.
  const auto acc = accepting_mask(dfa);
  for (State q = 0; q < dfa.state_count(); ++q) {
    SquareSearch search{q, &acc, std::nullopt, std::nullopt, HalfMode::Forbid};
    if (square_search(dfa, search)) return false;
  }
  return true;
}

bool subset_dext(const Dfa& dfa) {
  require_binary_alphabet(dfa);
  const auto coacc = coaccessible_states(dfa);
  if (!coacc[dfa.start()]) return true;
  // Any D prefix of an accepted word has parameter l with l^2 + 3 < n; a
  // longer beta run already certifies a word outside the extension set.
  const auto max_pairs = max_prefix_parameter(dfa.state_count());
  if (has_word_failing_before_half(dfa, coacc, max_pairs)) return false;
  if (!max_pairs) return true;
  for (State q = 0; q < dfa.state_count(); ++q)
    if (has_broken_second_half(dfa, coacc, q, *max_pairs)) return false;
  return true;
}

WordList enumerate_d_words(const Dfa& dfa) {
  if (!finite_and_subset_d(dfa))
    throw Error(ErrorCode::PreconditionFailed, "language is not a finite subset of D");
  WordList out;
  const State n = dfa.state_count();
  const auto halves = half_endpoints(dfa, n);
  for (State q = 0; q < n; ++q)
    for (State t = 0; t < n; ++t) {
      if (!dfa.is_accepting(t)) continue;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (!halves.count({q, k})) continue;
        if (auto u = square_reach(dfa, SquareQuery{q, t, k, true})) out.push_back(*ex_decode(*u + *u));
      }
    }
  canonicalize(out);
  return out;
}

WordList enumerate_d_prefixes(const Dfa& dfa) {
  if (!subset_dext(dfa))
    throw Error(ErrorCode::PreconditionFailed, "some accepted word has no D prefix");
  WordList out;
  const State n = dfa.state_count();
  const auto coacc = coaccessible_states(dfa);
  const std::uint32_t ceiling = prefix_length_ceiling(n);
  const auto halves = half_endpoints(dfa, ceiling);
  for (State q = 0; q < n; ++q)
    for (State t = 0; t < n; ++t) {
      if (!coacc[t]) continue;
      for (std::uint32_t k = 0; k <= ceiling; ++k) {
        if (!halves.count({q, k})) continue;
        if (auto u = square_reach(dfa, SquareQuery{q, t, k, true})) out.push_back(*ex_decode(*u + *u));
      }
    }
  canonicalize(out);
  return out;
}

Word witness_outside_d(const Dfa& dfa) {
  require_binary_alphabet(dfa);
  const PumpDecomposition pump = pump_decomposition(dfa);
  // Lengths |head tail| + k |loop| form an arithmetic progression, which
  // meets the quadratic D length set only finitely often.
  for (std::size_t k = 0;; ++k) {
    Word w = pump.pumped(k);
    if (!in_d(w)) return w;
  }
}

}  // namespace rr
