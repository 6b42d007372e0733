#include "rr/selftest.hpp"

#include <algorithm>
#include <future>
#include <iterator>
#include <set>
#include <sstream>

#include "rr/analysis.hpp"
#include "rr/brute.hpp"
#include "rr/coding.hpp"
#include "rr/error.hpp"
#include "rr/generator.hpp"
#include "rr/oracle.hpp"
#include "rr/reductions.hpp"

namespace rr {

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

std::string show(std::string_view w) { return cli_spelling(w); }

std::string show(const WordList& words) {
  std::string out = "[";
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + show(words[i]);
  return out + "]";
}

class Collector {
public:
  explicit Collector(std::string name) { result_.name = std::move(name); }

  // A check whose failure is described by text only.
  template <class Describe>
  void check(bool ok, Describe describe) {
    ++result_.trials;
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(describe());
  }

  // A check on one automaton. `fails` must be self-contained so the shrinker
  // can re-run it on smaller automata; exceptions count as failures.
  template <class Fails>
  void check_dfa(const Dfa& dfa, Fails fails, const std::string& inputs, bool shrink = true) {
    auto guarded = [&](const Dfa& a) {
      try {
        return fails(a);
      } catch (const std::exception&) {
        return true;
      }
    };
    const bool failed = guarded(dfa);
    check(!failed, [&] {
      const Dfa small = shrink ? shrink_counterexample(dfa, guarded) : dfa;
      return serialize(small) + "inputs: " + inputs + "\n";
    });
  }

  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

std::size_t count_or(std::optional<std::size_t> trials, std::size_t fallback) { return trials.value_or(fallback); }

Word random_word(Rng& rng, std::size_t max_len) { return rng.binary_word(rng.below(max_len + 1)); }

Dfa random_small_dfa(Rng& rng, std::uint32_t max_states, const std::string& alphabet = "01") {
  static constexpr Probability choices[] = {{1, 6}, {1, 3}, {1, 2}};
  GeneratorConfig config;
  config.seed = rng.next();
  config.max_states = max_states;
  config.accept_probability = choices[rng.below(3)];
  config.alphabet = alphabet;
  return random_dfa(config);
}

// Finite languages built around D words: exact ex-words, extensions,
// truncations, one-bit corruptions and unrelated short words.
Dfa structured_finite_dfa(Rng& rng) {
  WordList words;
  const std::size_t count = 1 + rng.below(3);
  for (std::size_t i = 0; i < count; ++i) {
    Word w = ex_encode(random_word(rng, 2));
    switch (rng.below(6)) {
      case 0:
      case 1: break;
      case 2: w += rng.binary_word(1 + rng.below(3)); break;
      case 3: w.resize(rng.below(w.size())); break;
      case 4: w[rng.below(w.size())] ^= 1; break;
      case 5: w = random_word(rng, 8); break;
    }
    words.push_back(std::move(w));
  }
  return minimize(finite_language_dfa(words));
}

Dfa ex_any_suffix_dfa(std::string_view x) {
  // ex(x) {0,1}*
  const Word w = ex_encode(x);
  const Dfa chain = singleton_dfa(w);
  std::vector<State> table;
  for (State q = 0; q < chain.state_count(); ++q)
    for (std::size_t a = 0; a < 2; ++a) table.push_back(chain.next_by_index(q, a));
  const State last = static_cast<State>(w.size());
  table[std::size_t{last} * 2] = table[std::size_t{last} * 2 + 1] = last;
  return minimize(Dfa("01", chain.state_count(), 0, {last}, std::move(table)));
}

Dfa zero_power_star_dfa(State m) {
  // (0^m)*
  std::vector<State> table;
  for (State q = 0; q < m; ++q) {
    table.push_back((q + 1) % m);
    table.push_back(m);
  }
  table.push_back(m);
  table.push_back(m);
  return Dfa("01", m + 1, 0, {0}, std::move(table));
}

Dfa zero_one_star_dfa() { return Dfa("01", 3, 0, {0}, {1, 2, 2, 0, 2, 2}); }

std::string random_infinite_family_member(Rng& rng, Dfa* out, bool* ground_truth) {
  switch (rng.below(5)) {
    case 0: {
      const Word x = random_word(rng, 3);
      *out = ex_word_tail_dfa(x);
      *ground_truth = true;
      return "ex(" + show(x) + ")0*";
    }
    case 1: {
      const Word x = random_word(rng, 2);
      *out = ex_any_suffix_dfa(x);
      *ground_truth = true;
      return "ex(" + show(x) + "){0,1}*";
    }
    case 2: {
      const State m = static_cast<State>(1 + rng.below(3));
      *out = zero_power_star_dfa(m);
      *ground_truth = false;
      return "(0^" + std::to_string(m) + ")*";
    }
    case 3:
      *out = zero_one_star_dfa();
      *ground_truth = false;
      return "(01)*";
    default: {
      const Word head = random_word(rng, 3);
      const Word cycle = rng.binary_word(1 + rng.below(3));
      *out = beta_cycle_dfa(head, cycle);
      *ground_truth = false;
      return "beta(" + show(head) + ")beta(" + show(cycle) + ")*";
    }
  }
}

// Instance streams shared by the suites that use them and by the bounds
// suite, which re-derives them from the same seeds.

struct Instance {
  Dfa dfa;
  std::string label;
  WordList expected_words;  // suite 06
  bool expected_flag = false;  // suite 08
};

std::vector<Instance> d_word_count_instances(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t count = 1 + rng.below(5);
    WordList xs, words;
    for (std::size_t j = 0; j < count; ++j) xs.push_back(random_word(rng, 3));
    canonicalize(xs);
    for (const Word& x : xs) words.push_back(ex_encode(x));
    GeneratorConfig config;
    config.family = Family::UnionOfSingletons;
    config.words = words;
    out.push_back({random_dfa(config), "ex" + show(xs), xs, false});
  }
  return out;
}

std::vector<Instance> finite_instances(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  std::vector<Instance> out;
  // Random small automata first, then as many around D words.
  while (out.size() < trials) {
    Dfa a = random_small_dfa(rng, 6);
    if (is_finite(a)) out.push_back({std::move(a), "random", {}, false});
  }
  for (std::size_t i = 0; i < trials; ++i) out.push_back({structured_finite_dfa(rng), "structured", {}, false});
  return out;
}

std::vector<Instance> infinite_family_instances(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < trials; ++i) {
    Dfa a = zero_one_star_dfa();
    bool truth = false;
    const std::string label = random_infinite_family_member(rng, &a, &truth);
    out.push_back({std::move(a), label, {}, truth});
  }
  return out;
}

const char* const kCodec = "01-codec-roundtrip";
const char* const kAntichain = "02-antichain";
const char* const kLength = "03-length-law";
const char* const kSingleton = "04-singleton-size";
const char* const kFiniteness = "05-finiteness";
const char* const kDWordCount = "06-d-word-count";
const char* const kDTests = "07-d-tests-finite";
const char* const kDextInfinite = "08-dext-infinite";
const char* const kRoundTrip = "09-round-trip";
const char* const kDifferential = "10-differential";
const char* const kDivergence = "11-divergence";
const char* const kImmunity = "12-immunity";
const char* const kHashClosure = "13-hash-closure";
const char* const kCofinite = "14-cofinite-bijection";
const char* const kBounds = "15-bounds";

// ---------------------------------------------------------------------------

SuiteResult codec_roundtrip(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kCodec);
  Rng rng(seed);
  const std::size_t count = count_or(trials, 10000);
  for (std::size_t i = 0; i < count; ++i) {
    const Word x = random_word(rng, 24);
    const Word y = rng.binary_word(1 + rng.below(24));
    bool ok = true;
    try {
      ok = ex_decode(ex_encode(x)) == x && dex_decode(dex_encode(x)) == x && beta_decode(beta_encode(x)) == x;
      const auto [p, q] = pair_split(x);
      ok = ok && !q.empty() && pair_join(p, q) == x;
      ok = ok && pair_split(pair_join(x, y)) == std::make_pair(x, y);
    } catch (const std::exception&) {
      ok = false;
    }
    c.check(ok, [&] { return "x=" + show(x) + " y=" + show(y) + "\n"; });
  }
  // Corrupted encodings must not decode: every single-bit flip, and halves
  // with the wrong zero run.
  for (const Word& x : binary_words_up_to(3)) {
    const Word w = ex_encode(x);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word bad = w;
      bad[i] ^= 1;
      c.check(!ex_decode(bad), [&] { return "flip " + std::to_string(i) + " of ex(" + show(x) + ") decodes\n"; });
    }
  }
  for (const Word& x : binary_words_up_to(5)) {
    for (std::size_t zeros = 0; zeros <= x.size() * x.size() + 8; ++zeros) {
      if (zeros == zero_run_length(x.size())) continue;
      const Word half = beta_encode(x) + "11" + Word(zeros, '0');
      c.check(!is_half_word(half) && !ex_decode(half + half),
              [&] { return "half " + half + " with " + std::to_string(zeros) + " zeros accepted\n"; });
    }
  }
  return c.take();
}

SuiteResult antichain(std::uint64_t, std::optional<std::size_t>) {
  Collector c(kAntichain);
  const WordList xs = binary_words_up_to(7);
  std::vector<Word> encoded;
  for (const Word& x : xs) encoded.push_back(ex_encode(x));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      c.check(!encoded[j].starts_with(encoded[i]),
              [&] { return "ex(" + show(xs[i]) + ") is a prefix of ex(" + show(xs[j]) + ")\n"; });
    }
  return c.take();
}

SuiteResult length_law(std::uint64_t seed, std::optional<std::size_t>) {
  Collector c(kLength);
  Rng rng(seed);
  for (std::uint64_t n = 0; n <= 20; ++n) {
    const Word x = rng.binary_word(n);
    const std::size_t len = ex_encode(x).size();
    c.check(len == 2 * n * n + 4 * n + 10 && len == d_length(n),
            [&] { return "x=" + show(x) + " |ex(x)|=" + std::to_string(len) + "\n"; });
  }
  return c.take();
}

SuiteResult singleton_size(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kSingleton);
  Rng rng(seed);
  const std::size_t count = count_or(trials, 500);
  for (std::size_t i = 0; i < count; ++i) {
    const Word w = random_word(rng, 20);
    const Dfa a = singleton_dfa(w);
    const Dfa m = minimize(a);
    const bool ok = a.state_count() == w.size() + 2 && m.state_count() == a.state_count() && minimize(m) == m &&
                    unique_word(m) == w;
    c.check(ok, [&] { return "w=" + show(w) + " states=" + std::to_string(a.state_count()) + "\n"; });
  }
  return c.take();
}

SuiteResult finiteness(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kFiniteness);
  Rng rng(seed);
  const std::size_t count = count_or(trials, 500);
  for (std::size_t i = 0; i < count; ++i) {
    const Dfa a = random_small_dfa(rng, 6);
    c.check_dfa(
        a,
        [](const Dfa& d) {
          const bool finite = is_finite(d);
          if (finite == brute::infinite_by_band(d)) return true;
          if (!finite) return false;
          const WordList words = enumerate_language(d);
          if (words != brute::accepted_up_to(d, d.state_count() - 1)) return true;
          return std::any_of(words.begin(), words.end(), [&](const Word& w) { return w.size() >= d.state_count(); });
        },
        "-");
  }
  return c.take();
}

SuiteResult d_word_count(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kDWordCount);
  for (const Instance& inst : d_word_count_instances(seed, count_or(trials, 200))) {
    const WordList expected = inst.expected_words;
    c.check_dfa(
        inst.dfa,
        [&](const Dfa& d) {
          if (!finite_and_subset_d(d)) return true;
          const WordList words = enumerate_d_words(d);
          return words != expected || words.size() > d.state_count();
        },
        inst.label, false);
  }
  return c.take();
}

// Per-word checks against the definition table.
bool d_tests_disagree(const Dfa& d, const brute::DTable& table) {
  if (!is_finite(d)) return false;
  const WordList words = enumerate_language(d);
  const bool all_in_d = std::all_of(words.begin(), words.end(), [&](const Word& w) { return table.in_d(w); });
  const bool all_in_dext =
      std::all_of(words.begin(), words.end(), [&](const Word& w) { return table.has_d_prefix(w); });
  return finite_and_subset_d(d) != all_in_d || subset_dext(d) != all_in_dext ||
         language_within_d_ext(d) != all_in_dext;
}

SuiteResult d_tests_finite(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kDTests);
  const brute::DTable table(6);
  for (const Instance& inst : finite_instances(seed, count_or(trials, 500)))
    c.check_dfa(inst.dfa, [&](const Dfa& d) { return d_tests_disagree(d, table); }, inst.label);
  return c.take();
}

SuiteResult dext_infinite(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kDextInfinite);
  for (const Instance& inst : infinite_family_instances(seed, count_or(trials, 100))) {
    const bool truth = inst.expected_flag;
    c.check_dfa(
        inst.dfa, [&](const Dfa& d) { return subset_dext(d) != truth || language_within_d_ext(d) != truth; },
        inst.label + " expected " + (truth ? "true" : "false"), false);
  }
  return c.take();
}

SuiteResult round_trip(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kRoundTrip);
  Rng rng(seed);
  const LanguageSpec parity = LanguageSpec::builtin(LanguageSpec::Builtin::Parity1);
  const std::size_t count = count_or(trials, 200);
  for (std::size_t i = 0; i < count; ++i) {
    const Word x = random_word(rng, 6);
    WordList sample;
    for (std::size_t j = rng.below(4); j > 0; --j) sample.push_back(random_word(rng, 6));
    if (rng.below(2)) sample.push_back(x);
    const LanguageSpec finite = LanguageSpec::finite(sample);
    const Dfa a = forward_reduction(x);
    for (ReductionVariant variant : {ReductionVariant::Flat, ReductionVariant::Prefix}) {
      const QueryList q = backward(a, variant);
      const bool ok = q == QueryList::queries({x}) && eval_dtt(q, finite) == lang_member(finite, x) &&
                      eval_dtt(q, parity) == lang_member(parity, x);
      c.check(ok, [&] {
        return "x=" + show(x) + " X=" + finite.describe() + (variant == ReductionVariant::Flat ? " flat" : " prefix") +
               " got " + encode_query_list(q);
      });
    }
  }
  return c.take();
}

SuiteResult differential(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kDifferential);
  Rng rng(seed);
  const std::size_t count = count_or(trials, 500);
  // The random automata are too small to accept anything near D, so the
  // structured ones exercise the query branches.
  std::vector<std::pair<Dfa, std::string>> corpus;
  for (std::size_t i = 0; i < count; ++i) corpus.emplace_back(random_small_dfa(rng, 6), "random");
  for (std::size_t i = 0; i < count / 2; ++i) {
    if (i % 3 == 2) {
      Dfa a = zero_one_star_dfa();
      bool truth = false;
      const std::string label = random_infinite_family_member(rng, &a, &truth);
      corpus.emplace_back(std::move(a), label);
    } else {
      corpus.emplace_back(structured_finite_dfa(rng), "structured");
    }
  }
  for (const auto& [a, label] : corpus) {
    WordList sample;
    for (std::size_t j = 1 + rng.below(3); j > 0; --j) sample.push_back(random_word(rng, 2));
    const std::vector<LanguageSpec> specs{LanguageSpec::finite(sample),
                                          LanguageSpec::builtin(LanguageSpec::Builtin::Parity1),
                                          LanguageSpec::builtin(LanguageSpec::Builtin::None)};
    for (const LanguageSpec& x : specs)
      c.check_dfa(
          a,
          [&](const Dfa& d) {
            return eval_dtt(backward_flat(d), x) != decide_reg_exact(d, FilterKind::flat(x)) ||
                   eval_dtt(backward_prefix(d), x) != decide_reg_exact(d, FilterKind::prefix(x));
          },
          label + " X=" + x.describe());
  }
  return c.take();
}

SuiteResult divergence(std::uint64_t, std::optional<std::size_t>) {
  Collector c(kDivergence);
  const Dfa a = singleton_dfa(ex_encode("1") + "1");
  const LanguageSpec x = LanguageSpec::finite({"1"});
  c.check_dfa(
      a,
      [&](const Dfa& d) {
        const QueryList q = backward_prefix(d);
        return !(q == QueryList::queries({"1"})) || !eval_dtt(q, x) || !decide_reg_exact(d, FilterKind::prefix(x)) ||
               decide_reg_exact(d, FilterKind::literal_dex(x));
      },
      "X=finite:1", false);
  return c.take();
}

SuiteResult immunity(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kImmunity);
  Rng rng(seed);
  const std::size_t count = count_or(trials, 200);
  for (std::size_t i = 0; i < count;) {
    Dfa a = random_small_dfa(rng, 6);
    if (i % 4 == 3) {
      bool truth = false;
      random_infinite_family_member(rng, &a, &truth);
    }
    if (is_finite(a)) continue;
    ++i;
    c.check_dfa(
        a,
        [](const Dfa& d) {
          if (is_finite(d)) return false;
          const Word w = witness_outside_d(d);
          return !accepts(d, w) || ex_decode(w).has_value();
        },
        "-");
  }
  return c.take();
}

SuiteResult hash_closure(std::uint64_t seed, std::optional<std::size_t> trials) {
  Collector c(kHashClosure);
  Rng rng(seed);
  const std::size_t count = count_or(trials, 200);
  const WordList words = brute::words_up_to("01", 8);
  for (std::size_t i = 0; i < count; ++i) {
    const Dfa a = random_small_dfa(rng, 6, "01#");
    c.check_dfa(
        a,
        [&](const Dfa& d) {
          const Dfa closed = absorb_hash_suffix(d);
          if (closed.alphabet() != "01") return true;
          return std::any_of(words.begin(), words.end(), [&](const Word& w) {
            return accepts(closed, w) != brute::hash_closure_accepts(d, w, 2 * d.state_count());
          });
        },
        "words of length <= 8");
  }
  return c.take();
}

SuiteResult cofinite(std::uint64_t, std::optional<std::size_t>) {
  Collector c(kCofinite);
  const WordList pool = binary_words_up_to(3);
  std::vector<WordList> sets{{}};
  // All subsets of size <= 4, in index order.
  std::vector<std::vector<std::size_t>> frontier{{}};
  for (std::size_t size = 1; size <= 4; ++size) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier)
      for (std::size_t k = s.empty() ? 0 : s.back() + 1; k < pool.size(); ++k) {
        auto t = s;
        t.push_back(k);
        WordList words;
        for (std::size_t j : t) words.push_back(pool[j]);
        sets.push_back(std::move(words));
        next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  for (const WordList& excluded : sets) {
    bool ok = true;
    try {
      const CofiniteBijection f(excluded);
      const std::set<Word> bar(excluded.begin(), excluded.end());
      const std::size_t limit = f.block_length() + 2;
      std::set<Word> image;
      for (const Word& x : binary_words_up_to(limit)) {
        const Word y = f.apply(x);
        ok = ok && !bar.count(y) && f.invert(y) == x && image.insert(y).second;
      }
      for (const Word& y : binary_words_up_to(limit)) {
        if (bar.count(y)) {
          bool rejected = false;
          try {
            f.invert(y);
          } catch (const Error& e) {
            rejected = e.code() == ErrorCode::NotInImage;
          }
          ok = ok && rejected && !image.count(y);
        } else {
          ok = ok && image.count(y) && f.apply(f.invert(y)) == y;
        }
      }
    } catch (const std::exception&) {
      ok = false;
    }
    c.check(ok, [&] { return "excluded=" + show(excluded) + "\n"; });
  }
  return c.take();
}

// |ex(x)| <= 2(n-3) + 4 sqrt(n-3) + 10, in integers.
bool within_length_bound(std::uint64_t l, std::uint64_t n) {
  const std::uint64_t m = n - 3;
  const std::uint64_t lhs = 2 * l * l + 4 * l;
  if (lhs <= 2 * m) return true;
  const std::uint64_t excess = lhs - 2 * m;
  return excess * excess <= 16 * m;
}

SuiteResult bounds(std::uint64_t seed, std::optional<std::size_t>) {
  Collector c(kBounds);
  std::vector<Instance> all = d_word_count_instances(derive_seed(seed, kDWordCount), default_trials(kDWordCount));
  for (auto* source : {&finite_instances, &infinite_family_instances}) {
    const char* name = source == &finite_instances ? kDTests : kDextInfinite;
    auto more = (*source)(derive_seed(seed, name), default_trials(name));
    std::move(more.begin(), more.end(), std::back_inserter(all));
  }
  for (const Instance& inst : all) {
    const Dfa& a = inst.dfa;
    const std::uint64_t n = a.state_count();
    if (n < 4 || !subset_dext(a)) continue;
    const WordList prefixes = enumerate_d_prefixes(a);
    const bool ok = prefixes.size() <= 2 * n * n * n &&
                    std::all_of(prefixes.begin(), prefixes.end(),
                                [&](const Word& x) { return within_length_bound(x.size(), n); });
    c.check(ok, [&] { return serialize(a) + "inputs: " + inst.label + " R_D=" + show(prefixes) + "\n"; });
  }
  return c.take();
}

using SuiteFn = SuiteResult (*)(std::uint64_t, std::optional<std::size_t>);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
  std::size_t trials;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {kCodec, codec_roundtrip, 10000},   {kAntichain, antichain, 255 * 254},
      {kLength, length_law, 21},          {kSingleton, singleton_size, 500},
      {kFiniteness, finiteness, 500},     {kDWordCount, d_word_count, 200},
      {kDTests, d_tests_finite, 500},     {kDextInfinite, dext_infinite, 100},
      {kRoundTrip, round_trip, 200},      {kDifferential, differential, 500},
      {kDivergence, divergence, 1},       {kImmunity, immunity, 200},
      {kHashClosure, hash_closure, 200},  {kCofinite, cofinite, 1941},
      {kBounds, bounds, 0},
  };
  return entries;
}

const SuiteEntry& lookup(const std::string& name) {
  for (const SuiteEntry& e : registry())
    if (name == e.name) return e;
  throw Error(ErrorCode::BadConfig, "unknown suite '" + name + "'");
}

// Redirects every transition into `drop` to `keep` and deletes `drop`.
Dfa merge_states(const Dfa& dfa, State keep, State drop) {
  const State n = dfa.state_count();
  auto renumber = [&](State q) {
    if (q == drop) q = keep;
    return q > drop ? q - 1 : q;
  };
  std::vector<State> table;
  std::vector<State> accepting;
  for (State q = 0; q < n; ++q) {
    if (q == drop) continue;
    if (dfa.is_accepting(q)) accepting.push_back(renumber(q));
    for (std::size_t s = 0; s < dfa.alphabet_size(); ++s) table.push_back(renumber(dfa.next_by_index(q, s)));
  }
  return Dfa(dfa.alphabet(), n - 1, renumber(dfa.start()), std::move(accepting), std::move(table));
}

Dfa without_accepting(const Dfa& dfa, State q) {
  std::vector<State> accepting;
  for (State r : dfa.accepting_states())
    if (r != q) accepting.push_back(r);
  std::vector<State> table;
  for (State p = 0; p < dfa.state_count(); ++p)
    for (std::size_t s = 0; s < dfa.alphabet_size(); ++s) table.push_back(dfa.next_by_index(p, s));
  return Dfa(dfa.alphabet(), dfa.state_count(), dfa.start(), std::move(accepting), std::move(table));
}

}  // namespace

Dfa shrink_counterexample(const Dfa& dfa, const std::function<bool(const Dfa&)>& fails) {
  Dfa current = dfa;
  for (bool progress = true; progress;) {
    progress = false;
    for (State q : current.accepting_states()) {
      Dfa candidate = without_accepting(current, q);
      if (fails(candidate)) {
        current = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  for (bool progress = true; progress && current.state_count() > 1;) {
    progress = false;
    for (State keep = 0; keep < current.state_count() && !progress; ++keep)
      for (State drop = 0; drop < current.state_count() && !progress; ++drop) {
        if (keep == drop) continue;
        Dfa candidate = merge_states(current, keep, drop);
        if (fails(candidate)) {
          current = std::move(candidate);
          progress = true;
        }
      }
  }
  return current;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteEntry& e : registry()) names.emplace_back(e.name);
  std::sort(names.begin(), names.end());
  return names;
}

std::size_t default_trials(const std::string& name) { return lookup(name).trials; }

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::optional<std::size_t> trials) {
  const SuiteEntry& entry = lookup(name);
  try {
    return entry.run(derive_seed(seed, name), trials);
  } catch (const std::exception& e) {
    SuiteResult broken;
    broken.name = name;
    broken.trials = 1;
    broken.failures = 1;
    broken.counterexamples.push_back(std::string("uncaught error: ") + e.what() + "\n");
    return broken;
  }
}

SelftestReport run_selftest(const SelftestOptions& options) {
  std::vector<std::string> names = options.only.empty() ? suite_names() : options.only;
  for (const std::string& name : names) lookup(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto trials_for = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = options.trials.find(name);
    if (it == options.trials.end()) return std::nullopt;
    return it->second;
  };

  SelftestReport report;
  if (options.parallel) {
    std::vector<std::future<SuiteResult>> pending;
    for (const std::string& name : names)
      pending.push_back(std::async(std::launch::async, [&, name] { return run_suite(name, options.seed, trials_for(name)); }));
    for (auto& f : pending) report.suites.push_back(f.get());
  } else {
    for (const std::string& name : names) report.suites.push_back(run_suite(name, options.seed, trials_for(name)));
  }
  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return report;
}

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string SelftestReport::text() const {
  std::ostringstream out;
  std::size_t passing = 0;
  for (const SuiteResult& s : suites) {
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << " trials=" << s.trials << " failures=" << s.failures << "\n";
    for (const std::string& example : s.counterexamples) {
      std::istringstream lines(example);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
    if (s.passed()) ++passing;
  }
  out << (passed() ? "ok" : "FAILED") << " " << passing << "/" << suites.size() << " suites\n";
  return out.str();
}

}  // namespace rr
