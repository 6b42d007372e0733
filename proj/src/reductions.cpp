#include "rr/reductions.hpp"

#include <algorithm>

#include "rr/analysis.hpp"
#include "rr/coding.hpp"
#include "rr/error.hpp"

namespace rr {

QueryList QueryList::queries(WordList words) {
  for (const Word& w : words) require_binary(w);
  canonicalize(words);
  return QueryList(false, std::move(words));
}

Dfa forward_reduction(std::string_view x) {
  require_binary(x);
  return singleton_dfa(ex_encode(x));
}

QueryList backward_flat(const Dfa& dfa) {
  require_binary_alphabet(dfa);
  if (!finite_and_subset_d(dfa)) return QueryList::trivially_positive();
  return QueryList::queries(enumerate_d_words(dfa));
}

QueryList backward_prefix(const Dfa& dfa) {
  require_binary_alphabet(dfa);
  if (!subset_dext(dfa)) return QueryList::trivially_positive();
  return QueryList::queries(enumerate_d_prefixes(dfa));
}

QueryList backward(const Dfa& dfa, ReductionVariant variant) {
  return variant == ReductionVariant::Flat ? backward_flat(dfa) : backward_prefix(dfa);
}

std::string encode_query_list(const QueryList& list) {
  if (list.is_trivially_positive()) return "trivial\n";
  std::string out = "queries\n#";
  for (const Word& w : list.words()) out += w + '#';
  return out + '\n';
}

QueryList decode_query_list(std::string_view text) {
  auto fail = [](const std::string& what) -> QueryList { throw Error(ErrorCode::MalformedInput, what); };
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text == "trivial") return QueryList::trivially_positive();
  if (!text.starts_with("queries\n")) return fail("expected 'trivial' or 'queries'");
  std::string_view seq = text.substr(8);
  if (seq.empty() || seq.front() != '#') return fail("query sequence must start with '#'");
  if (seq.back() != '#') return fail("query sequence must end with '#'");
  if (seq.find('\n') != std::string_view::npos) return fail("query sequence must be a single line");
  WordList words;
  seq.remove_prefix(1);
  while (!seq.empty()) {
    const auto end = seq.find('#');
    const std::string_view w = seq.substr(0, end);
    if (!is_binary(w)) return fail("query '" + std::string(w) + "' is not a binary word");
    words.emplace_back(w);
    seq.remove_prefix(end + 1);
  }
  return QueryList::queries(std::move(words));
}

QueryList flatten(const std::vector<QueryList>& lists) {
  WordList all;
  for (const QueryList& list : lists) {
    if (list.is_trivially_positive()) return QueryList::trivially_positive();
    all.insert(all.end(), list.words().begin(), list.words().end());
  }
  return QueryList::queries(std::move(all));
}

bool eval_dtt(const QueryList& list, const LanguageSpec& language) {
  if (list.is_trivially_positive()) return true;
  return std::any_of(list.words().begin(), list.words().end(),
                     [&](const Word& w) { return lang_member(language, w); });
}

}  // namespace rr
