#include "rr/automata.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

#include "rr/error.hpp"

namespace rr {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

void validate_alphabet(const std::string& alphabet) {
  if (alphabet.empty()) malformed("empty alphabet");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const char c = alphabet[i];
    if (c != '0' && c != '1' && c != '#') malformed(std::string("unsupported symbol '") + c + "'");
    if (alphabet.find(c, i + 1) != std::string::npos) malformed(std::string("repeated symbol '") + c + "'");
  }
}

}  // namespace

Dfa::Dfa(std::string alphabet, State state_count, State start, std::vector<State> accepting,
         std::vector<State> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      start_(start),
      accepting_(state_count, false),
      table_(std::move(transitions)) {
  validate_alphabet(alphabet_);
  if (state_count_ == 0) malformed("a DFA needs at least one state");
  if (start_ >= state_count_) malformed("start state out of range");
  for (State q : accepting) {
    if (q >= state_count_) malformed("accepting state out of range");
    accepting_[q] = true;
  }
  if (table_.size() != std::size_t{state_count_} * alphabet_.size()) malformed("transition table is not total");
  for (State r : table_)
    if (r >= state_count_) malformed("transition target out of range");
}

std::vector<State> Dfa::accepting_states() const {
  std::vector<State> out;
  for (State q = 0; q < state_count_; ++q)
    if (accepting_[q]) out.push_back(q);
  return out;
}

State Dfa::next(State q, char symbol) const {
  const std::size_t a = symbol_index(symbol);
  if (a == std::string::npos)
    throw Error(ErrorCode::ForeignSymbol, std::string("symbol '") + symbol + "' not in alphabet " + alphabet_);
  return next_by_index(q, a);
}

State Dfa::run(State from, std::string_view w) const {
  State q = from;
  for (char c : w) q = next(q, c);
  return q;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineReader {
public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++number_;
    return true;
  }

  std::size_t number() const { return number_; }
  [[noreturn]] void fail(const std::string& what) const { malformed("line " + std::to_string(number_) + ": " + what); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

State parse_index(const LineReader& reader, std::string_view field) {
  State value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) reader.fail("expected a state index, got '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> expect_line(LineReader& reader, std::string_view keyword) {
  std::string_view line;
  if (!reader.next(line)) malformed("missing '" + std::string(keyword) + "' line");
  auto fields = split_fields(line);
  if (fields.empty() || fields[0] != keyword) reader.fail("expected '" + std::string(keyword) + "'");
  return fields;
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  LineReader reader(text);

  auto header = expect_line(reader, "dfa");
  if (header.size() != 2 || header[1] != "v1") reader.fail("unsupported header");

  auto alphabet_line = expect_line(reader, "alphabet");
  if (alphabet_line.size() != 2) reader.fail("alphabet takes one field");
  const std::string alphabet(alphabet_line[1]);
  try {
    validate_alphabet(alphabet);
  } catch (const Error& e) {
    reader.fail(e.what());
  }

  auto states_line = expect_line(reader, "states");
  if (states_line.size() != 2) reader.fail("states takes one field");
  const State n = parse_index(reader, states_line[1]);
  if (n == 0) reader.fail("a DFA needs at least one state");

  auto start_line = expect_line(reader, "start");
  if (start_line.size() != 2) reader.fail("start takes one field");
  const State start = parse_index(reader, start_line[1]);
  if (start >= n) reader.fail("start state out of range");

  auto accept_line = expect_line(reader, "accept");
  std::vector<State> accepting;
  std::vector<bool> seen_accepting(n, false);
  for (std::size_t i = 1; i < accept_line.size(); ++i) {
    const State q = parse_index(reader, accept_line[i]);
    if (q >= n) reader.fail("accepting state out of range");
    if (seen_accepting[q]) reader.fail("duplicate accepting state");
    seen_accepting[q] = true;
    accepting.push_back(q);
  }

  const std::size_t k = alphabet.size();
  std::vector<State> table(std::size_t{n} * k, 0);
  std::vector<bool> defined(table.size(), false);
  std::size_t count = 0;
  std::string_view line;
  while (reader.next(line)) {
    auto fields = split_fields(line);
    if (fields.empty()) {
      // Only a trailing newline is tolerated.
      std::string_view rest;
      if (reader.next(rest)) reader.fail("unexpected blank line");
      break;
    }
    if (fields[0] != "trans" || fields.size() != 4) reader.fail("expected 'trans <q> <symbol> <q'>'");
    const State q = parse_index(reader, fields[1]);
    if (q >= n) reader.fail("source state out of range");
    if (fields[2].size() != 1 || alphabet.find(fields[2][0]) == std::string::npos)
      reader.fail("symbol '" + std::string(fields[2]) + "' not in alphabet");
    const std::size_t a = alphabet.find(fields[2][0]);
    const State r = parse_index(reader, fields[3]);
    if (r >= n) reader.fail("target state out of range");
    const std::size_t slot = std::size_t{q} * k + a;
    if (defined[slot]) reader.fail("duplicate transition");
    defined[slot] = true;
    table[slot] = r;
    ++count;
  }
  if (count != table.size()) {
    const auto missing = std::find(defined.begin(), defined.end(), false) - defined.begin();
    malformed("line " + std::to_string(reader.number()) + ": incomplete transition table, no transition for state " +
              std::to_string(missing / k) + " on '" + alphabet[missing % k] + "'");
  }
  return Dfa(alphabet, n, start, std::move(accepting), std::move(table));
}

std::string serialize(const Dfa& dfa) {
  std::ostringstream out;
  out << "dfa v1\n";
  out << "alphabet " << dfa.alphabet() << '\n';
  out << "states " << dfa.state_count() << '\n';
  out << "start " << dfa.start() << '\n';
  out << "accept";
  for (State q : dfa.accepting_states()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < dfa.state_count(); ++q)
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a)
      out << "trans " << q << ' ' << dfa.alphabet()[a] << ' ' << dfa.next_by_index(q, a) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Constructions

bool accepts(const Dfa& dfa, std::string_view w) { return dfa.is_accepting(dfa.run(dfa.start(), w)); }

Dfa singleton_dfa(std::string_view w, std::string alphabet) {
  validate_alphabet(alphabet);
  for (char c : w)
    if (alphabet.find(c) == std::string::npos)
      throw Error(ErrorCode::ForeignSymbol, std::string("symbol '") + c + "' not in alphabet " + alphabet);

  // States 0..|w| are the prefixes of w, |w|+1 is dead.
  const State n = static_cast<State>(w.size() + 2);
  const State dead = n - 1;
  const std::size_t k = alphabet.size();
  std::vector<State> table(std::size_t{n} * k, dead);
  for (std::size_t i = 0; i < w.size(); ++i) table[i * k + alphabet.find(w[i])] = static_cast<State>(i + 1);
  return Dfa(std::move(alphabet), n, 0, {static_cast<State>(w.size())}, std::move(table));
}

Dfa finite_language_dfa(const WordList& words, std::string alphabet) {
  validate_alphabet(alphabet);
  const std::size_t k = alphabet.size();
  constexpr State unset = ~State{0};
  std::vector<State> table(k, unset);
  std::vector<State> accepting;
  std::vector<bool> is_acc(1, false);
  State count = 1;
  for (const Word& w : words) {
    State q = 0;
    for (char c : w) {
      const std::size_t a = alphabet.find(c);
      if (a == std::string::npos)
        throw Error(ErrorCode::ForeignSymbol, std::string("symbol '") + c + "' not in alphabet " + alphabet);
      if (table[q * k + a] == unset) {
        table[q * k + a] = count++;
        table.resize(std::size_t{count} * k, unset);
        is_acc.push_back(false);
      }
      q = table[q * k + a];
    }
    if (!is_acc[q]) {
      is_acc[q] = true;
      accepting.push_back(q);
    }
  }
  const State dead = count++;
  table.resize(std::size_t{count} * k, unset);
  for (State& r : table)
    if (r == unset) r = dead;
  return Dfa(std::move(alphabet), count, 0, std::move(accepting), std::move(table));
}

// ---------------------------------------------------------------------------
// Reachability

std::vector<bool> accessible_states(const Dfa& dfa) {
  std::vector<bool> seen(dfa.state_count(), false);
  std::vector<State> stack{dfa.start()};
  seen[dfa.start()] = true;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
      const State r = dfa.next_by_index(q, a);
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible_states(const Dfa& dfa) {
  const State n = dfa.state_count();
  std::vector<std::vector<State>> reverse(n);
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) reverse[dfa.next_by_index(q, a)].push_back(q);

  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (dfa.is_accepting(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State p : reverse[q])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

namespace {

std::vector<bool> useful_states(const Dfa& dfa) {
  auto acc = accessible_states(dfa);
  const auto coacc = coaccessible_states(dfa);
  for (State q = 0; q < dfa.state_count(); ++q) acc[q] = acc[q] && coacc[q];
  return acc;
}

std::vector<State> members(const std::vector<bool>& mask) {
  std::vector<State> out;
  for (State q = 0; q < mask.size(); ++q)
    if (mask[q]) out.push_back(q);
  return out;
}

// Renumbers the states reachable from start in breadth-first order.
Dfa canonical_bfs(const Dfa& dfa) {
  const State n = dfa.state_count();
  const std::size_t k = dfa.alphabet_size();
  constexpr State unset = ~State{0};
  std::vector<State> order;
  std::vector<State> rename(n, unset);
  rename[dfa.start()] = 0;
  order.push_back(dfa.start());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      const State r = dfa.next_by_index(order[i], a);
      if (rename[r] == unset) {
        rename[r] = static_cast<State>(order.size());
        order.push_back(r);
      }
    }
  std::vector<State> table(order.size() * k);
  std::vector<State> accepting;
  for (State i = 0; i < order.size(); ++i) {
    if (dfa.is_accepting(order[i])) accepting.push_back(i);
    for (std::size_t a = 0; a < k; ++a) table[i * k + a] = rename[dfa.next_by_index(order[i], a)];
  }
  return Dfa(dfa.alphabet(), static_cast<State>(order.size()), 0, std::move(accepting), std::move(table));
}

}  // namespace

Dfa minimize(const Dfa& input) {
  // Restrict to accessible states first, then Moore refinement.
  const Dfa dfa = canonical_bfs(input);
  const State n = dfa.state_count();
  const std::size_t k = dfa.alphabet_size();

  std::vector<State> block(n);
  for (State q = 0; q < n; ++q) block[q] = dfa.is_accepting(q) ? 1 : 0;
  std::size_t block_count = 0;
  for (;;) {
    std::map<std::vector<State>, State> signatures;
    std::vector<State> refined(n);
    for (State q = 0; q < n; ++q) {
      std::vector<State> sig;
      sig.reserve(k + 1);
      sig.push_back(block[q]);
      for (std::size_t a = 0; a < k; ++a) sig.push_back(block[dfa.next_by_index(q, a)]);
      auto [it, inserted] = signatures.emplace(std::move(sig), static_cast<State>(signatures.size()));
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (signatures.size() == block_count) break;
    block_count = signatures.size();
  }

  std::vector<State> table(block_count * k);
  std::vector<bool> acc(block_count, false);
  for (State q = 0; q < n; ++q) {
    acc[block[q]] = dfa.is_accepting(q);
    for (std::size_t a = 0; a < k; ++a) table[block[q] * k + a] = block[dfa.next_by_index(q, a)];
  }
  return canonical_bfs(Dfa(dfa.alphabet(), static_cast<State>(block_count), block[dfa.start()], members(acc),
                           std::move(table)));
}

TrimResult trim(const Dfa& dfa) {
  const auto acc = accessible_states(dfa);
  const auto coacc = coaccessible_states(dfa);
  const State n = dfa.state_count();
  const std::size_t k = dfa.alphabet_size();

  std::vector<State> rename(n);
  State kept = 0;
  for (State q = 0; q < n; ++q)
    if (acc[q] && coacc[q]) rename[q] = kept++;
  const State dead = kept;
  for (State q = 0; q < n; ++q)
    if (!(acc[q] && coacc[q])) rename[q] = dead;

  std::vector<State> table(std::size_t{kept + 1} * k, dead);
  std::vector<State> accepting;
  for (State q = 0; q < n; ++q) {
    if (!(acc[q] && coacc[q])) continue;
    if (dfa.is_accepting(q)) accepting.push_back(rename[q]);
    for (std::size_t a = 0; a < k; ++a) table[rename[q] * k + a] = rename[dfa.next_by_index(q, a)];
  }
  return TrimResult{Dfa(dfa.alphabet(), kept + 1, rename[dfa.start()], std::move(accepting), std::move(table)),
                    members(acc), members(coacc)};
}

bool is_finite(const Dfa& dfa) {
  // A cycle through useful states (accessible and coaccessible) is exactly an
  // accepting walk that repeats a state.
  const auto useful = useful_states(dfa);
  const State n = dfa.state_count();
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(n, White);
  for (State root = 0; root < n; ++root) {
    if (!useful[root] || color[root] != White) continue;
    std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [q, a] = stack.back();
      if (a == dfa.alphabet_size()) {
        color[q] = Black;
        stack.pop_back();
        continue;
      }
      const State r = dfa.next_by_index(q, a++);
      if (!useful[r]) continue;
      if (color[r] == Grey) return false;
      if (color[r] == White) {
        color[r] = Grey;
        stack.emplace_back(r, 0);
      }
    }
  }
  return true;
}

WordList enumerate_language(const Dfa& dfa) {
  if (!is_finite(dfa)) throw Error(ErrorCode::InfiniteLanguage, "enumerate_language needs a finite language");
  const auto useful = useful_states(dfa);
  WordList out;
  if (!useful[dfa.start()]) return out;
  // The useful subgraph is acyclic, so plain depth-first expansion terminates.
  std::vector<std::pair<State, Word>> stack{{dfa.start(), Word{}}};
  while (!stack.empty()) {
    auto [q, w] = std::move(stack.back());
    stack.pop_back();
    if (dfa.is_accepting(q)) out.push_back(w);
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
      const State r = dfa.next_by_index(q, a);
      if (useful[r]) stack.emplace_back(r, w + dfa.alphabet()[a]);
    }
  }
  canonicalize(out);
  return out;
}

std::optional<Word> unique_word(const Dfa& dfa) {
  if (!is_finite(dfa)) return std::nullopt;
  const auto useful = useful_states(dfa);
  if (!useful[dfa.start()]) return std::nullopt;

  // count[q] = number of accepted words read from q, saturated at 2.
  const State n = dfa.state_count();
  std::vector<int> count(n, -1);
  auto saturate = [](int x) { return x > 2 ? 2 : x; };
  std::vector<std::pair<State, std::size_t>> stack{{dfa.start(), 0}};
  while (!stack.empty()) {
    auto& [q, a] = stack.back();
    if (a == dfa.alphabet_size()) {
      int c = dfa.is_accepting(q) ? 1 : 0;
      for (std::size_t b = 0; b < dfa.alphabet_size(); ++b) {
        const State r = dfa.next_by_index(q, b);
        if (useful[r]) c = saturate(c + count[r]);
      }
      count[q] = c;
      stack.pop_back();
      continue;
    }
    const State r = dfa.next_by_index(q, a++);
    if (useful[r] && count[r] < 0) stack.emplace_back(r, 0);
  }
  if (count[dfa.start()] != 1) return std::nullopt;

  Word w;
  State q = dfa.start();
  while (!dfa.is_accepting(q)) {
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
      const State r = dfa.next_by_index(q, a);
      if (useful[r] && count[r] == 1) {
        w.push_back(dfa.alphabet()[a]);
        q = r;
        break;
      }
    }
  }
  return w;
}

Word PumpDecomposition::pumped(std::size_t k) const {
  Word w = head;
  for (std::size_t i = 0; i < k; ++i) w += loop;
  return w + tail;
}

PumpDecomposition pump_decomposition(const Dfa& dfa) {
  if (is_finite(dfa)) throw Error(ErrorCode::FiniteLanguage, "pump_decomposition needs an infinite language");
  const auto useful = useful_states(dfa);
  const State n = dfa.state_count();
  auto is_acc = [&](State r) { return dfa.is_accepting(r); };

  // For each useful state on a cycle take shortest head, loop and tail; the
  // overall shortest combination is no longer than the shortest accepted word
  // of length >= n, hence at most 2n - 1.
  std::optional<PumpDecomposition> best;
  for (State q = 0; q < n; ++q) {
    if (!useful[q]) continue;
    auto loop = shortest_word(dfa, q, [q](State r) { return r == q; }, true);
    if (!loop) continue;
    auto head = shortest_word(dfa, dfa.start(), [q](State r) { return r == q; });
    auto tail = shortest_word(dfa, q, is_acc);
    PumpDecomposition candidate{*head, *loop, *tail};
    if (!best) {
      best = candidate;
      continue;
    }
    const auto key = [](const PumpDecomposition& d) {
      return std::make_tuple(d.head.size() + d.loop.size() + d.tail.size(), d.head + d.loop + d.tail, d.head.size());
    };
    if (key(candidate) < key(*best)) best = candidate;
  }
  return *best;
}

Dfa absorb_hash_suffix(const Dfa& dfa) {
  const std::size_t hash = dfa.symbol_index('#');
  if (hash == std::string::npos) throw Error(ErrorCode::NoHashSymbol, "alphabet " + dfa.alphabet() + " has no '#'");
  const State n = dfa.state_count();

  std::vector<State> accepting;
  for (State q = 0; q < n; ++q) {
    // The #-orbit of q has at most n distinct states.
    State r = q;
    for (State step = 0; step <= n; ++step) {
      if (dfa.is_accepting(r)) {
        accepting.push_back(q);
        break;
      }
      r = dfa.next_by_index(r, hash);
    }
  }

  std::string alphabet;
  for (char c : dfa.alphabet())
    if (c != '#') alphabet.push_back(c);
  if (alphabet.empty()) throw Error(ErrorCode::NoHashSymbol, "alphabet has no symbols besides '#'");
  std::vector<State> table;
  table.reserve(std::size_t{n} * alphabet.size());
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a)
      if (a != hash) table.push_back(dfa.next_by_index(q, a));
  return Dfa(std::move(alphabet), n, dfa.start(), std::move(accepting), std::move(table));
}

}  // namespace rr
