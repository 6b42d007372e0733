#include <doctest.h>

#include "rr/analysis.hpp"
#include "rr/error.hpp"
#include "rr/reductions.hpp"
#include "support.hpp"

using namespace rr;
using rr::test::random_small;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::BadConfig;
}

FilterKind filter_for(ReductionVariant v, const LanguageSpec& x) {
  return v == ReductionVariant::Flat ? FilterKind::flat(x) : FilterKind::prefix(x);
}

std::vector<LanguageSpec> sample_languages() {
  return {LanguageSpec::finite({"1"}), LanguageSpec::finite({"", "01", "110"}),
          LanguageSpec::builtin(LanguageSpec::Builtin::Parity1), LanguageSpec::builtin(LanguageSpec::Builtin::None),
          LanguageSpec::builtin(LanguageSpec::Builtin::All)};
}

// Automata close to the interesting region: finite sets of encodings, their
// extensions and corruptions, plus the infinite families.
std::vector<Dfa> structured_automata(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Dfa> out;
  for (int i = 0; i < count; ++i) {
    switch (rng.below(4)) {
      case 0: out.push_back(ex_word_tail_dfa(rng.binary_word(rng.below(3)))); break;
      case 1: out.push_back(beta_cycle_dfa(rng.binary_word(rng.below(3)), rng.binary_word(1 + rng.below(2)))); break;
      default: {
        WordList words;
        for (std::size_t j = 1 + rng.below(3); j > 0; --j) {
          Word w = ex_encode(rng.binary_word(rng.below(4)));
          if (rng.chance(1, 3)) w += rng.binary_word(1 + rng.below(4));
          if (rng.chance(1, 5)) w[rng.below(w.size())] ^= 1;
          words.push_back(w);
        }
        out.push_back(test::union_of(words));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("forward_reduction") {
  CHECK(forward_reduction("").state_count() == 12);
  CHECK(forward_reduction("0").state_count() == 18);
  for (const Word& x : binary_words_up_to(5)) {
    const Dfa a = forward_reduction(x);
    REQUIRE(a.state_count() == d_length(x.size()) + 2);
    REQUIRE(unique_word(a) == ex_encode(x));
  }
  CHECK(code_of([] { forward_reduction("0#"); }) == ErrorCode::ForeignSymbol);
}

TEST_CASE("forward reduction is many-one for both filters") {
  for (const LanguageSpec& x : sample_languages())
    for (const Word& w : binary_words_up_to(5)) {
      const Dfa a = forward_reduction(w);
      REQUIRE(decide_reg_exact(a, FilterKind::flat(x)) == lang_member(x, w));
      REQUIRE(decide_reg_exact(a, FilterKind::prefix(x)) == lang_member(x, w));
    }
}

TEST_CASE("backward examples") {
  CHECK(backward_flat(test::zero_star()).is_trivially_positive());
  CHECK(backward_flat(forward_reduction("01")) == QueryList::queries({"01"}));
  CHECK(backward_flat(test::empty_language()) == QueryList::queries({}));
  CHECK(backward_prefix(test::empty_language()) == QueryList::queries({}));
  CHECK(backward_prefix(ex_word_tail_dfa("1")) == QueryList::queries({"1"}));
  CHECK(backward_flat(ex_word_tail_dfa("1")).is_trivially_positive());
  CHECK(backward_prefix(test::union_of({ex_encode("") + "11", ex_encode("0")})) == QueryList::queries({"", "0"}));
  CHECK(backward(forward_reduction("1"), ReductionVariant::Prefix) == QueryList::queries({"1"}));
  CHECK(code_of([] { backward_flat(singleton_dfa("0", "01#")); }) == ErrorCode::NotBinaryAlphabet);
}

TEST_CASE("backward reductions are disjunctive truth-table reductions") {
  std::vector<Dfa> automata = structured_automata(31, 250);
  for (std::uint64_t seed = 0; seed < 250; ++seed) automata.push_back(random_small(seed, 6));
  for (const Dfa& a : automata)
    for (ReductionVariant v : {ReductionVariant::Flat, ReductionVariant::Prefix}) {
      const QueryList q = backward(a, v);
      for (const LanguageSpec& x : sample_languages()) REQUIRE(eval_dtt(q, x) == decide_reg_exact(a, filter_for(v, x)));
      if (!q.is_trivially_positive()) REQUIRE(q.words().size() <= std::size_t{2} * a.state_count() * a.state_count() * a.state_count());
    }
}

TEST_CASE("round trip through both reductions") {
  for (const Word& x : binary_words_up_to(4)) {
    REQUIRE(backward_flat(forward_reduction(x)) == QueryList::queries({x}));
    REQUIRE(backward_prefix(forward_reduction(x)) == QueryList::queries({x}));
  }
}

TEST_CASE("query list codec") {
  CHECK(encode_query_list(QueryList::trivially_positive()) == "trivial\n");
  CHECK(encode_query_list(QueryList::queries({"1"})) == "queries\n#1#\n");
  CHECK(encode_query_list(QueryList::queries({})) == "queries\n#\n");
  CHECK(encode_query_list(QueryList::queries({"0", ""})) == "queries\n##0#\n");
  CHECK(QueryList::queries({"1", "0", "1"}).words() == WordList{"0", "1"});
  CHECK(decode_query_list("trivial") == QueryList::trivially_positive());
  CHECK(decode_query_list("queries\n##0#\n") == QueryList::queries({"", "0"}));
  CHECK(decode_query_list("queries\n#\n") == QueryList::queries({}));
  for (const char* bad : {"", "trivial\nx", "queries\n", "queries\n1#", "queries\n#1", "queries\n#2#", "queries\n#1#\n#"})
    CHECK(code_of([&] { decode_query_list(bad); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { QueryList::queries({"#"}); }) == ErrorCode::ForeignSymbol);

  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    WordList words;
    for (std::size_t j = rng.below(5); j > 0; --j) words.push_back(rng.binary_word(rng.below(5)));
    const QueryList q = QueryList::queries(words);
    REQUIRE(decode_query_list(encode_query_list(q)) == q);
  }
}

TEST_CASE("flatten") {
  CHECK(flatten({}) == QueryList::queries({}));
  CHECK(flatten({QueryList::queries({"1"}), QueryList::trivially_positive()}).is_trivially_positive());
  CHECK(flatten({QueryList::queries({"1", "0"}), QueryList::queries({"0", "11"})}) ==
        QueryList::queries({"0", "1", "11"}));

  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    std::vector<QueryList> lists;
    for (std::size_t j = rng.below(4); j > 0; --j) {
      if (rng.chance(1, 8)) {
        lists.push_back(QueryList::trivially_positive());
        continue;
      }
      WordList words;
      for (std::size_t k = rng.below(4); k > 0; --k) words.push_back(rng.binary_word(rng.below(4)));
      lists.push_back(QueryList::queries(words));
    }
    const QueryList flat = flatten(lists);
    for (const LanguageSpec& x : sample_languages()) {
      bool any = false;
      for (const QueryList& l : lists) any = any || eval_dtt(l, x);
      REQUIRE(eval_dtt(flat, x) == any);
    }
  }
}

TEST_CASE("eval_dtt") {
  const LanguageSpec x = LanguageSpec::finite({"1"});
  CHECK(eval_dtt(QueryList::trivially_positive(), LanguageSpec::builtin(LanguageSpec::Builtin::None)));
  CHECK_FALSE(eval_dtt(QueryList::queries({}), LanguageSpec::builtin(LanguageSpec::Builtin::All)));
  CHECK(eval_dtt(QueryList::queries({"0", "1"}), x));
  CHECK_FALSE(eval_dtt(QueryList::queries({"0", "11"}), x));
}
