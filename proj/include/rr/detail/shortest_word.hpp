#pragma once

#include <deque>

namespace rr {

template <class Pred>
std::optional<Word> shortest_word(const Dfa& dfa, State from, Pred target, bool nonempty) {
  if (!nonempty && target(from)) return Word{};

  // Breadth-first over states reached by nonempty words; expanding in symbol
  // order makes the first word recorded for each state its length-lex least.
  std::vector<std::optional<Word>> best(dfa.state_count());
  std::deque<State> queue;
  auto visit = [&](State r, Word w) -> bool {
    if (best[r]) return false;
    if (target(r)) {
      best[r] = std::move(w);
      return true;
    }
    best[r] = std::move(w);
    queue.push_back(r);
    return false;
  };

  for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
    const State r = dfa.next_by_index(from, a);
    if (visit(r, Word(1, dfa.alphabet()[a]))) return best[r];
  }
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
      const State r = dfa.next_by_index(q, a);
      if (visit(r, *best[q] + dfa.alphabet()[a])) return best[r];
    }
  }
  return std::nullopt;
}

}  // namespace rr
