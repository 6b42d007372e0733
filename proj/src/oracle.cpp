#include "rr/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "rr/analysis.hpp"
#include "rr/coding.hpp"
#include "rr/error.hpp"

namespace rr {

LanguageSpec LanguageSpec::finite(WordList words) {
  for (const Word& w : words) require_binary(w);
  canonicalize(words);
  return LanguageSpec(Repr(std::move(words)));
}

LanguageSpec LanguageSpec::by_dfa(Dfa dfa) {
  if (dfa.alphabet() != "01")
    throw Error(ErrorCode::NotBinaryAlphabet, "language DFA must have alphabet 01, got " + dfa.alphabet());
  return LanguageSpec(Repr(std::move(dfa)));
}

LanguageSpec LanguageSpec::builtin(Builtin which) { return LanguageSpec(Repr(which)); }

LanguageSpec LanguageSpec::parse(std::string_view text) {
  if (text == "parity1") return builtin(Builtin::Parity1);
  if (text == "all") return builtin(Builtin::All);
  if (text == "none") return builtin(Builtin::None);
  if (text.starts_with("finite:")) {
    WordList words;
    std::string_view rest = text.substr(7);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      if (item.empty()) throw Error(ErrorCode::MalformedInput, "empty item in finite set (spell the empty word '@')");
      const Word w = parse_cli_word(item);
      if (!is_binary(w)) throw Error(ErrorCode::MalformedInput, "'" + std::string(item) + "' is not a binary word");
      words.push_back(w);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (rest.empty()) throw Error(ErrorCode::MalformedInput, "trailing comma in finite set");
    }
    return finite(std::move(words));
  }
  if (text.starts_with("dfa:")) {
    const std::string path(text.substr(4));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return by_dfa(parse_dfa(buffer.str()));
  }
  throw Error(ErrorCode::MalformedInput, "unknown language spec '" + std::string(text) + "'");
}

bool LanguageSpec::contains(std::string_view w) const {
  require_binary(w);
  if (const auto* words = std::get_if<WordList>(&repr_))
    return std::binary_search(words->begin(), words->end(), w, LengthLexLess{});
  if (const auto* dfa = std::get_if<Dfa>(&repr_)) return accepts(*dfa, w);
  switch (std::get<Builtin>(repr_)) {
    case Builtin::Parity1: return std::count(w.begin(), w.end(), '1') % 2 == 1;
    case Builtin::All: return true;
    case Builtin::None: return false;
  }
  return false;
}

std::string LanguageSpec::describe() const {
  if (const auto* words = std::get_if<WordList>(&repr_)) {
    std::string out = "finite:";
    for (std::size_t i = 0; i < words->size(); ++i) {
      if (i) out += ',';
      out += cli_spelling((*words)[i]);
    }
    return out;
  }
  if (std::holds_alternative<Dfa>(repr_)) return "dfa";
  switch (std::get<Builtin>(repr_)) {
    case Builtin::Parity1: return "parity1";
    case Builtin::All: return "all";
    case Builtin::None: return "none";
  }
  return "?";
}

bool lang_member(const LanguageSpec& language, std::string_view w) { return language.contains(w); }

bool filter_member(const FilterKind& filter, std::string_view w) {
  require_binary(w);
  switch (filter.kind()) {
    case FilterKind::Kind::RawD: return in_d(w);
    case FilterKind::Kind::FlatUniversal: {
      const auto x = ex_decode(w);
      return !x || lang_member(filter.language(), *x);
    }
    case FilterKind::Kind::PrefixUniversal: {
      const auto split = split_d_prefix(w);
      return !split || lang_member(filter.language(), *ex_decode(split->first));
    }
    case FilterKind::Kind::LiteralDex: {
      const auto split = split_d_prefix(w);
      if (!split) return true;
      return split->second.empty() && lang_member(filter.language(), *ex_decode(split->first));
    }
  }
  return false;
}

namespace {

// Walk of the prefix tree of {ex(x) : |x|^2 + 3 < n}, pruned to prefixes
// that still lead to an accepting state.
struct PrefixTreeScan {
  bool within_d_ext = true;
  WordList d_prefixes;      // tree leaves u with delta(s, u) coaccessible
  WordList accepted_d_words;  // tree leaves u that are accepted
};

bool in_prefix_tree(std::string_view w, std::uint32_t max_pairs) {
  if (!is_prefix_of_d_word(w)) return false;
  HalfWordScanner scanner;
  scanner.feed(w);
  return scanner.pairs() <= max_pairs;
}

PrefixTreeScan scan_prefix_tree(const Dfa& dfa) {
  PrefixTreeScan scan;
  const auto coacc = coaccessible_states(dfa);
  if (!coacc[dfa.start()]) return scan;
  const auto max_pairs = max_prefix_parameter(dfa.state_count());
  if (!max_pairs) {
    scan.within_d_ext = false;
    return scan;
  }
  // The only D prefix a word can have is the one fixed by its first 11 pair,
  // so inner tree nodes have none and leaves are exactly the D words.
  std::vector<std::pair<Word, State>> stack{{Word{}, dfa.start()}};
  while (!stack.empty()) {
    auto [u, q] = std::move(stack.back());
    stack.pop_back();
    if (in_d(u)) {
      scan.d_prefixes.push_back(u);
      if (dfa.is_accepting(q)) scan.accepted_d_words.push_back(u);
      continue;
    }
    if (dfa.is_accepting(q)) scan.within_d_ext = false;
    for (char c : {'0', '1'}) {
      const State r = dfa.next(q, c);
      if (!coacc[r]) continue;
      Word v = u + c;
      if (!in_prefix_tree(v, *max_pairs)) {
        scan.within_d_ext = false;
        continue;
      }
      stack.emplace_back(std::move(v), r);
    }
  }
  canonicalize(scan.d_prefixes);
  canonicalize(scan.accepted_d_words);
  return scan;
}

// Does A accept some ex(x)? Both halves are read in lockstep: the pair set
// R_l(q) collects (delta(s, beta(x)), delta(q, beta(x))) over |x| = l. Once
// l^2 + 3 reaches n every 0-orbit is periodic, so the outcome sequence is
// determined by (R_l, l mod T) with T the lcm of the 0-cycle lengths.
bool accepts_some_d_word(const Dfa& dfa) {
  const State n = dfa.state_count();
  struct Orbit {
    std::vector<State> states;
    std::size_t tail = 0;
    std::size_t cycle = 0;
  };
  std::vector<Orbit> orbits(n);
  std::uint64_t period = 1;
  for (State q = 0; q < n; ++q) {
    std::vector<long> seen_at(n, -1);
    State r = q;
    Orbit& orbit = orbits[q];
    while (seen_at[r] < 0) {
      seen_at[r] = static_cast<long>(orbit.states.size());
      orbit.states.push_back(r);
      r = dfa.next(r, '0');
    }
    orbit.tail = static_cast<std::size_t>(seen_at[r]);
    orbit.cycle = orbit.states.size() - orbit.tail;
    period = std::lcm(period, std::uint64_t{orbit.cycle});
  }
  auto after_zeros = [&](State q, std::uint64_t z) {
    const Orbit& orbit = orbits[q];
    if (z < orbit.states.size()) return orbit.states[z];
    return orbit.states[orbit.tail + (z - orbit.tail) % orbit.cycle];
  };

  // pairs[q] is a bitmap over (a, b).
  std::vector<std::vector<bool>> pairs(n, std::vector<bool>(std::size_t{n} * n, false));
  for (State q = 0; q < n; ++q) pairs[q][std::size_t{dfa.start()} * n + q] = true;
  std::set<std::pair<std::vector<std::vector<bool>>, std::uint64_t>> seen;

  for (std::uint64_t l = 0;; ++l) {
    const std::uint64_t zeros = zero_run_length(l);
    for (State q = 0; q < n; ++q)
      for (std::size_t ab = 0; ab < pairs[q].size(); ++ab) {
        if (!pairs[q][ab]) continue;
        const State a = after_zeros(dfa.run(static_cast<State>(ab / n), "11"), zeros);
        const State b = after_zeros(dfa.run(static_cast<State>(ab % n), "11"), zeros);
        if (a == q && dfa.is_accepting(b)) return true;
      }
    if (zeros >= n && !seen.emplace(pairs, l % period).second) return false;

    std::vector<std::vector<bool>> next(n, std::vector<bool>(std::size_t{n} * n, false));
    for (State q = 0; q < n; ++q)
      for (std::size_t ab = 0; ab < pairs[q].size(); ++ab) {
        if (!pairs[q][ab]) continue;
        for (std::string_view code : {"01", "10"}) {
          const State a = dfa.run(static_cast<State>(ab / n), code);
          const State b = dfa.run(static_cast<State>(ab % n), code);
          next[q][std::size_t{a} * n + b] = true;
        }
      }
    pairs = std::move(next);
  }
}

}  // namespace

bool language_within_d_ext(const Dfa& dfa) {
  require_binary_alphabet(dfa);
  return scan_prefix_tree(dfa).within_d_ext;
}

bool decide_reg_exact(const Dfa& dfa, const FilterKind& filter) {
  require_binary_alphabet(dfa);
  switch (filter.kind()) {
    case FilterKind::Kind::RawD: return accepts_some_d_word(dfa);
    case FilterKind::Kind::FlatUniversal: {
      // An infinite language always leaves D somewhere.
      if (!is_finite(dfa)) return true;
      const auto words = enumerate_language(dfa);
      return std::any_of(words.begin(), words.end(), [&](const Word& w) { return filter_member(filter, w); });
    }
    case FilterKind::Kind::PrefixUniversal:
    case FilterKind::Kind::LiteralDex: {
      const PrefixTreeScan scan = scan_prefix_tree(dfa);
      if (!scan.within_d_ext) return true;
      // Every accepted word now has one of the scanned D prefixes.
      const WordList& candidates =
          filter.kind() == FilterKind::Kind::PrefixUniversal ? scan.d_prefixes : scan.accepted_d_words;
      return std::any_of(candidates.begin(), candidates.end(),
                         [&](const Word& u) { return lang_member(filter.language(), *ex_decode(u)); });
    }
  }
  return false;
}

std::optional<Word> bounded_witness(const Dfa& dfa, const FilterKind& filter, std::size_t max_len) {
  require_binary_alphabet(dfa);
  if (filter.kind() == FilterKind::Kind::RawD) {
    // ex is length-graded and order preserving within a length.
    for (std::uint64_t l = 0; d_length(l) <= max_len; ++l)
      for (const Word& x : binary_words_of_length(l)) {
        Word w = ex_encode(x);
        if (accepts(dfa, w)) return w;
      }
    return std::nullopt;
  }
  const State n = dfa.state_count();
  // reach[r][q]: some word of length exactly r leads from q to acceptance.
  std::vector<std::vector<bool>> reach(max_len + 1, std::vector<bool>(n, false));
  for (State q = 0; q < n; ++q) reach[0][q] = dfa.is_accepting(q);
  for (std::size_t r = 1; r <= max_len; ++r)
    for (State q = 0; q < n; ++q) reach[r][q] = reach[r - 1][dfa.next(q, '0')] || reach[r - 1][dfa.next(q, '1')];

  for (std::size_t len = 0; len <= max_len; ++len) {
    if (!reach[len][dfa.start()]) continue;
    // Lexicographic depth-first over accepted words of this length.
    std::vector<std::pair<Word, State>> stack{{Word{}, dfa.start()}};
    while (!stack.empty()) {
      auto [w, q] = std::move(stack.back());
      stack.pop_back();
      if (w.size() == len) {
        if (filter_member(filter, w)) return w;
        continue;
      }
      const std::size_t remaining = len - w.size() - 1;
      for (char c : {'1', '0'}) {
        const State r = dfa.next(q, c);
        if (!reach[remaining][r]) continue;
        stack.emplace_back(w + c, r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace rr
