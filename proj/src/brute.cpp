#include "rr/brute.hpp"

#include "rr/coding.hpp"

namespace rr::brute {

WordList words_up_to(const std::string& alphabet, std::size_t max_len) {
  WordList out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    layer_begin = layer_end;
  }
  canonicalize(out);
  return out;
}

WordList accepted_up_to(const Dfa& dfa, std::size_t max_len) {
  WordList out;
  for (const Word& w : words_up_to(dfa.alphabet(), max_len)) {
    State q = dfa.start();
    for (char c : w) q = dfa.next(q, c);
    if (dfa.is_accepting(q)) out.push_back(w);
  }
  return out;
}

bool same_language_up_to(const Dfa& a, const Dfa& b, std::size_t max_len) {
  for (const Word& w : words_up_to(a.alphabet(), max_len))
    if (accepts(a, w) != accepts(b, w)) return false;
  return true;
}

bool infinite_by_band(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  for (const Word& w : words_up_to(dfa.alphabet(), 2 * n - 1))
    if (w.size() >= n && accepts(dfa, w)) return true;
  return false;
}

DTable::DTable(std::size_t max_param) : max_param_(max_param) {
  for (const Word& x : words_up_to("01", max_param)) {
    // beta(x) 11 0^{|x|^2+3}, twice, spelled out directly.
    Word half;
    for (char c : x) half += c == '0' ? "01" : "10";
    half += "11";
    half += Word(x.size() * x.size() + 3, '0');
    words_.insert(half + half);
  }
}

bool DTable::has_d_prefix(const Word& w) const { return d_prefix(w).has_value(); }

std::optional<Word> DTable::d_prefix(const Word& w) const {
  for (std::size_t len = 0; len <= w.size(); ++len) {
    Word prefix = w.substr(0, len);
    if (words_.count(prefix)) return prefix;
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> pair_reachability(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  const std::size_t m = n * n;
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t p = 0; p < m; ++p) {
    reach[p][p] = true;
    for (std::size_t a = 0; a < dfa.alphabet_size(); ++a) {
      const State x = dfa.next_by_index(static_cast<State>(p / n), a);
      const State y = dfa.next_by_index(static_cast<State>(p % n), a);
      reach[p][x * n + y] = true;
    }
  }
  // Warshall closure.
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

bool hash_closure_accepts(const Dfa& dfa, const Word& w, std::size_t max_k) {
  Word padded = w;
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (accepts(dfa, padded)) return true;
    padded.push_back('#');
  }
  return false;
}

}  // namespace rr::brute
