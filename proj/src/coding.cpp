#include "rr/coding.hpp"

#include <algorithm>
#include <cmath>
#include <boost/multiprecision/cpp_int.hpp>

#include "rr/error.hpp"

namespace rr {

using boost::multiprecision::cpp_int;

Word beta_encode(std::string_view x) {
  require_binary(x);
  Word out;
  out.reserve(2 * x.size());
  for (char c : x) out += (c == '0') ? "01" : "10";
  return out;
}

Word beta_decode(std::string_view w) {
  if (w.size() % 2 != 0) throw Error(ErrorCode::NotInImage, "odd length is not in the image of beta");
  Word x;
  x.reserve(w.size() / 2);
  for (std::size_t i = 0; i < w.size(); i += 2) {
    if (w[i] == '0' && w[i + 1] == '1')
      x.push_back('0');
    else if (w[i] == '1' && w[i + 1] == '0')
      x.push_back('1');
    else
      throw Error(ErrorCode::NotInImage, "pair at position " + std::to_string(i) + " is not 01 or 10");
  }
  return x;
}

std::optional<std::uint64_t> half_parameter(std::uint64_t length) {
  // half_length(n) = (n + 1)^2 + 4
  if (length < 5) return std::nullopt;
  const std::uint64_t square = length - 4;
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(square)));
  while (root * root > square) --root;
  while ((root + 1) * (root + 1) <= square) ++root;
  if (root * root != square || root == 0) return std::nullopt;
  return root - 1;
}

Word ex_encode(std::string_view x) {
  Word half = beta_encode(x);
  half += "11";
  half.append(zero_run_length(x.size()), '0');
  return half + half;
}

void HalfWordScanner::feed(char symbol) {
  switch (phase_) {
    case Phase::Pairs:
      phase_ = symbol == '0' ? Phase::PairsPending0 : symbol == '1' ? Phase::PairsPending1 : Phase::Reject;
      break;
    case Phase::PairsPending0:
      if (symbol == '1') {
        ++pairs_;
        phase_ = Phase::Pairs;
      } else {
        phase_ = Phase::Reject;
      }
      break;
    case Phase::PairsPending1:
      if (symbol == '0') {
        ++pairs_;
        phase_ = Phase::Pairs;
      } else if (symbol == '1') {
        phase_ = Phase::Zeros;
      } else {
        phase_ = Phase::Reject;
      }
      break;
    case Phase::Zeros:
      if (symbol == '0' && zeros_ < zero_run_length(pairs_))
        ++zeros_;
      else
        phase_ = Phase::Reject;
      break;
    case Phase::Reject:
      break;
  }
}

bool is_half_word(std::string_view w) {
  HalfWordScanner scanner;
  for (char c : w) {
    scanner.feed(c);
    if (scanner.rejected()) return false;
  }
  return scanner.accepts();
}

std::optional<Word> ex_decode(std::string_view w) {
  const auto n = half_parameter(w.size() / 2);
  if (w.size() % 2 != 0 || !n || d_length(*n) != w.size()) return std::nullopt;
  const std::string_view first = w.substr(0, w.size() / 2);
  if (first != w.substr(w.size() / 2)) return std::nullopt;
  if (!is_half_word(first)) return std::nullopt;
  return beta_decode(first.substr(0, 2 * *n));
}

namespace {

// Position of the first 11 pair at an even position, provided every earlier
// pair is 01 or 10.
std::optional<std::size_t> half_marker(std::string_view w) {
  for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
    const char a = w[i], b = w[i + 1];
    if (a == b) {
      if (a == '1') return i;
      return std::nullopt;
    }
    if ((a != '0' && a != '1') || (b != '0' && b != '1')) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Word, Word>> split_d_prefix(std::string_view w) {
  const auto marker = half_marker(w);
  if (!marker) return std::nullopt;
  const Word candidate = ex_encode(beta_decode(w.substr(0, *marker)));
  if (w.substr(0, candidate.size()) != candidate) return std::nullopt;
  return std::make_pair(candidate, Word(w.substr(candidate.size())));
}

bool is_prefix_of_d_word(std::string_view w) {
  HalfWordScanner scanner;
  for (char c : w) {
    scanner.feed(c);
    if (scanner.rejected()) break;
    if (scanner.phase() == HalfWordScanner::Phase::Zeros) break;
  }
  if (scanner.rejected()) return false;
  if (scanner.phase() != HalfWordScanner::Phase::Zeros) return is_binary(w);
  const std::size_t marker = 2 * scanner.pairs();
  const Word full = ex_encode(beta_decode(w.substr(0, marker)));
  return w.size() <= full.size() && full.compare(0, w.size(), w) == 0;
}

// ---------------------------------------------------------------------------
// Pairing

namespace {

cpp_int word_rank(std::string_view w) {
  cpp_int r = 1;
  for (char c : w) r = 2 * r + (c == '1' ? 1 : 0);
  return r - 1;
}

Word word_unrank(cpp_int r) {
  // r + 1 in binary is 1 followed by the word.
  cpp_int v = r + 1;
  Word reversed;
  while (v > 1) {
    reversed.push_back((v & 1) != 0 ? '1' : '0');
    v >>= 1;
  }
  return Word(reversed.rbegin(), reversed.rend());
}

cpp_int cantor(const cpp_int& a, const cpp_int& b) { return (a + b) * (a + b + 1) / 2 + b; }

std::pair<cpp_int, cpp_int> cantor_inverse(const cpp_int& z) {
  const cpp_int discriminant = 8 * z + 1;
  const cpp_int t = (cpp_int(boost::multiprecision::sqrt(discriminant)) - 1) / 2;
  const cpp_int b = z - t * (t + 1) / 2;
  return {t - b, b};
}

}  // namespace

std::pair<Word, Word> pair_split(std::string_view w) {
  require_binary(w);
  auto [a, b] = cantor_inverse(word_rank(w));
  return {word_unrank(a), word_unrank(b + 1)};
}

Word pair_join(std::string_view first, std::string_view second) {
  if (second.empty()) throw Error(ErrorCode::EmptySecondComponent, "second component must be nonempty");
  require_binary(first);
  require_binary(second);
  return word_unrank(cantor(word_rank(first), word_rank(second) - 1));
}

Word phi_encode(std::string_view x, std::string_view second) {
  if (second.empty()) throw Error(ErrorCode::EmptySecondComponent, "second component must be nonempty");
  require_binary(second);
  Word out = beta_encode(x);
  out.push_back(second[0]);
  out.append(second);
  return out;
}

std::pair<Word, Word> phi_decode(std::string_view w) {
  require_binary(w);
  Word x;
  for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
    if (w[i] == w[i + 1]) return {x, Word(w.substr(i + 1))};
    x.push_back(w[i] == '0' ? '0' : '1');
  }
  throw Error(ErrorCode::NotInImage, "'" + std::string(w) + "' has no 00 or 11 pair");
}

// ---------------------------------------------------------------------------
// Cofinite bijection

CofiniteBijection::CofiniteBijection(WordList excluded) : excluded_(std::move(excluded)) {
  for (const Word& w : excluded_) require_binary(w);
  canonicalize(excluded_);

  std::size_t longest = 0;
  for (const Word& w : excluded_) longest = std::max(longest, w.size());
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < excluded_.size() + 1) ++bits;
  block_length_ = 1 + std::max(longest, bits);
  if (block_length_ >= 63 || (std::size_t{1} << block_length_) < excluded_.size())
    throw Error(ErrorCode::BlockTooSmall, "no block of length " + std::to_string(block_length_) + " fits");

  marked_.reserve(excluded_.size());
  for (std::size_t i = 0; i < excluded_.size(); ++i) {
    Word m(block_length_, '0');
    for (std::size_t j = 0; j < block_length_; ++j)
      if (i >> (block_length_ - 1 - j) & 1) m[j] = '1';
    marked_.push_back(std::move(m));
  }
}

std::optional<std::size_t> CofiniteBijection::marked_index(std::string_view m) const {
  // Marked words are consecutive binary numerals starting at 0.
  auto it = std::lower_bound(marked_.begin(), marked_.end(), m);
  if (it == marked_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - marked_.begin());
}

std::optional<std::size_t> CofiniteBijection::excluded_index(std::string_view x) const {
  auto it = std::lower_bound(excluded_.begin(), excluded_.end(), x, LengthLexLess{});
  if (it == excluded_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - excluded_.begin());
}

namespace {

// Splits w = 0^i 1 m with |m| = block; returns i.
std::optional<std::size_t> chain_split(std::string_view w, std::size_t block) {
  const std::size_t i = w.find_first_not_of('0');
  if (i == std::string_view::npos || w[i] != '1' || w.size() - i - 1 != block) return std::nullopt;
  return i;
}

}  // namespace

Word CofiniteBijection::apply(std::string_view x) const {
  require_binary(x);
  if (auto i = excluded_index(x)) return "1" + marked_[*i];
  if (auto i = chain_split(x, block_length_); i && marked_index(x.substr(*i + 1))) return "0" + Word(x);
  return Word(x);
}

Word CofiniteBijection::invert(std::string_view y) const {
  require_binary(y);
  if (excluded_index(y)) throw Error(ErrorCode::NotInImage, "'" + std::string(y) + "' is excluded");
  if (auto i = chain_split(y, block_length_)) {
    if (auto m = marked_index(y.substr(*i + 1))) {
      if (*i == 0) return excluded_[*m];
      return Word(y.substr(1));
    }
  }
  return Word(y);
}

// ---------------------------------------------------------------------------
// dex

Word dex_encode(std::string_view x) {
  require_binary(x);
  if (x.empty()) return {};
  if (x[0] == '0') return ex_encode(x.substr(1));
  auto [first, second] = pair_split(x.substr(1));
  return ex_encode(first) + second;
}

Word dex_decode(std::string_view w) {
  require_binary(w);
  if (w.empty()) return {};
  auto split = split_d_prefix(w);
  if (!split) throw Error(ErrorCode::NotInImage, "'" + std::string(w) + "' has no D prefix");
  const Word x = *ex_decode(split->first);
  if (split->second.empty()) return "0" + x;
  return "1" + pair_join(x, split->second);
}

}  // namespace rr
