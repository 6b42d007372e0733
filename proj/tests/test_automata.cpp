#include <doctest.h>

#include "rr/brute.hpp"
#include "rr/error.hpp"
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

const char* const kSingleton0 =
    "dfa v1\nalphabet 01\nstates 3\nstart 0\naccept 1\n"
    "trans 0 0 1\ntrans 0 1 2\ntrans 1 0 2\ntrans 1 1 2\ntrans 2 0 2\ntrans 2 1 2\n";

}  // namespace

TEST_CASE("codec: singleton for 0 serializes to the documented text") {
  CHECK(serialize(singleton_dfa("0")) == kSingleton0);
  CHECK(parse_dfa(kSingleton0) == singleton_dfa("0"));
}

TEST_CASE("codec: malformed inputs") {
  const std::string missing = std::string(kSingleton0).substr(0, std::string(kSingleton0).rfind("trans"));
  CHECK(code_of([&] { parse_dfa(missing); }) == ErrorCode::MalformedInput);

  auto message = [](const std::string& text) {
    try {
      parse_dfa(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message(missing).find("incomplete transition table") != std::string::npos);
  CHECK(message("dfa v1\nalphabet 01\nstart 0\n").find("line 3") != std::string::npos);
  CHECK(message("dfa v2\n").find("line 1") != std::string::npos);
  CHECK(message(std::string(kSingleton0) + "trans 0 0 1\n").find("duplicate transition") != std::string::npos);
  CHECK(message("dfa v1\nalphabet 01\nstates 1\nstart 1\naccept\ntrans 0 0 0\ntrans 0 1 0\n")
            .find("start state out of range") != std::string::npos);
  CHECK(message("dfa v1\nalphabet 01\nstates 1\nstart 0\naccept\ntrans 0 0 3\ntrans 0 1 0\n")
            .find("line 6") != std::string::npos);
  CHECK(message("dfa v1\nalphabet 0a\nstates 1\nstart 0\naccept\n").find("line 2") != std::string::npos);
  CHECK(message("dfa v1\nalphabet 00\nstates 1\nstart 0\naccept\n").find("repeated") != std::string::npos);
  CHECK(message("dfa v1\nalphabet 01\nstates x\n").find("line 3") != std::string::npos);
  CHECK(message(std::string(kSingleton0) + "\n\n") != "accepted");
}

TEST_CASE("codec: constructor rejects invalid tables") {
  CHECK(code_of([] { Dfa("01", 2, 0, {}, {0, 1, 1}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { Dfa("01", 2, 0, {2}, {0, 1, 1, 1}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { Dfa("01", 2, 0, {}, {0, 1, 1, 5}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { Dfa("012", 1, 0, {}, {0, 0, 0}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { Dfa("01", 0, 0, {}, {}); }) == ErrorCode::MalformedInput);
}

TEST_CASE("codec: seeded round trip over 1000 random automata") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Dfa a = random_small(seed, 8, seed % 3 == 0 ? "01#" : "01");
    const std::string text = serialize(a);
    REQUIRE(parse_dfa(text) == a);
    CHECK(serialize(parse_dfa(text)) == text);
  }
}

TEST_CASE("accepts") {
  CHECK(accepts(singleton_dfa("01"), "01"));
  CHECK_FALSE(accepts(singleton_dfa("01"), "0"));
  CHECK(accepts(test::zero_star(), "000"));
  CHECK(code_of([] { accepts(singleton_dfa("01"), "0#"); }) == ErrorCode::ForeignSymbol);
}

TEST_CASE("singleton_dfa") {
  CHECK(singleton_dfa("01").state_count() == 4);
  CHECK(enumerate_language(singleton_dfa("01")) == WordList{"01"});
  CHECK(singleton_dfa("").state_count() == 2);
  CHECK(enumerate_language(singleton_dfa("")) == WordList{""});
  CHECK(singleton_dfa("0110").state_count() == 6);
  CHECK(minimize(singleton_dfa("0110")).state_count() == 6);
  CHECK(code_of([] { singleton_dfa("02"); }) == ErrorCode::ForeignSymbol);
  CHECK(enumerate_language(singleton_dfa("0#", "01#")) == WordList{"0#"});
}

TEST_CASE("singleton_dfa: size and language for every word up to length 10, sampled to 20") {
  for (const Word& w : binary_words_up_to(10)) {
    const Dfa a = singleton_dfa(w);
    REQUIRE(a.state_count() == w.size() + 2);
    REQUIRE(enumerate_language(a) == WordList{w});
  }
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word w = rng.binary_word(11 + rng.below(10));
    const Dfa a = singleton_dfa(w);
    CHECK(a.state_count() == w.size() + 2);
    CHECK(enumerate_language(a) == WordList{w});
    CHECK(minimize(a).state_count() == a.state_count());
  }
}

TEST_CASE("minimize") {
  SUBCASE("already minimal singleton only renumbers") {
    const Dfa a = singleton_dfa("01");
    const Dfa m = minimize(a);
    CHECK(m.state_count() == 4);
    CHECK(brute::same_language_up_to(a, m, 10));
    // Breadth-first from the start: the dead state is reached on '1' first.
    CHECK(m.next(0, '1') == 2);
  }
  SUBCASE("union of two D words is a fixed point") {
    const Dfa u = test::union_of({ex_encode("0"), ex_encode("1")});
    CHECK(minimize(u) == u);
    CHECK(enumerate_language(u) == WordList{ex_encode("0"), ex_encode("1")});
  }
  SUBCASE("unreachable accepting state") {
    // 0: accepting, 0 -> 0, 1 -> 1; 1: dead; 2: accepting but unreachable.
    const Dfa a("01", 3, 0, {0, 2}, {0, 1, 1, 1, 2, 2});
    const Dfa m = minimize(a);
    CHECK(m.state_count() == 2);
    CHECK(m == test::zero_star());
    CHECK(brute::same_language_up_to(a, m, 10));
  }
  SUBCASE("idempotent and language preserving on random automata") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Dfa a = random_small(seed, 8);
      const Dfa m = minimize(a);
      REQUIRE(minimize(m) == m);
      REQUIRE(brute::same_language_up_to(a, m, 10));
      CHECK(m.state_count() <= a.state_count());
    }
  }
  SUBCASE("minimal: distinct states have distinguishing words") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Dfa m = minimize(random_small(seed, 6));
      const auto words = brute::words_up_to("01", m.state_count());
      for (State p = 0; p < m.state_count(); ++p)
        for (State q = p + 1; q < m.state_count(); ++q) {
          bool distinguished = false;
          for (const Word& w : words)
            if (m.is_accepting(m.run(p, w)) != m.is_accepting(m.run(q, w))) {
              distinguished = true;
              break;
            }
          REQUIRE(distinguished);
        }
    }
  }
}

TEST_CASE("trim") {
  SUBCASE("singleton") {
    const TrimResult t = trim(singleton_dfa("01"));
    CHECK(t.coaccessible == std::vector<State>{0, 1, 2});
    CHECK(t.accessible == std::vector<State>{0, 1, 2, 3});
    CHECK(brute::same_language_up_to(t.dfa, singleton_dfa("01"), 8));
  }
  SUBCASE("empty accepting set") {
    const TrimResult t = trim(test::empty_language());
    CHECK(t.coaccessible.empty());
    CHECK(t.dfa.state_count() == 1);
  }
  SUBCASE("random automata keep their language") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Dfa a = random_small(seed, 7);
      const TrimResult t = trim(a);
      REQUIRE(brute::same_language_up_to(a, t.dfa, 10));
      // Accessible states are exactly those some short word reaches.
      std::vector<bool> reached(a.state_count(), false);
      for (const Word& w : brute::words_up_to("01", a.state_count())) reached[a.run(a.start(), w)] = true;
      std::vector<State> expected;
      for (State q = 0; q < a.state_count(); ++q)
        if (reached[q]) expected.push_back(q);
      CHECK(t.accessible == expected);
    }
  }
}

TEST_CASE("is_finite") {
  CHECK(is_finite(singleton_dfa("01")));
  CHECK_FALSE(is_finite(test::zero_star()));
  CHECK(is_finite(test::empty_language()));
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Dfa a = random_small(seed, 6, "01", {seed % 3 + 1, 6});
    REQUIRE(is_finite(a) == !brute::infinite_by_band(a));
  }
}

TEST_CASE("enumerate_language") {
  CHECK(enumerate_language(singleton_dfa("01")) == WordList{"01"});
  CHECK(enumerate_language(test::union_of({"", "0", "1"})) == WordList{"", "0", "1"});
  const WordList pair = enumerate_language(test::union_of({ex_encode("1"), ex_encode("0")}));
  CHECK(pair == WordList{ex_encode("0"), ex_encode("1")});
  CHECK(pair[0].size() == 16);
  CHECK(pair[1].size() == 16);
  CHECK(code_of([] { enumerate_language(test::zero_star()); }) == ErrorCode::InfiniteLanguage);

  SUBCASE("agrees with exhaustive acceptance, lengths below n") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const Dfa a = random_small(seed, 6, "01", {1, 6});
      if (!is_finite(a)) continue;
      const WordList words = enumerate_language(a);
      REQUIRE(words == brute::accepted_up_to(a, a.state_count() - 1));
      for (const Word& w : words) CHECK(w.size() < a.state_count());
    }
  }
}

TEST_CASE("unique_word") {
  CHECK(unique_word(singleton_dfa("0110")) == Word("0110"));
  CHECK_FALSE(unique_word(test::zero_star()));
  CHECK_FALSE(unique_word(test::union_of({"0", "1"})));
  CHECK_FALSE(unique_word(test::empty_language()));
  CHECK(unique_word(singleton_dfa("")) == Word(""));
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Dfa a = random_small(seed, 6, "01", {1, 6});
    if (!is_finite(a)) {
      CHECK_FALSE(unique_word(a));
      continue;
    }
    const WordList words = enumerate_language(a);
    REQUIRE(unique_word(a).has_value() == (words.size() == 1));
    if (words.size() == 1) CHECK(*unique_word(a) == words[0]);
  }
}

TEST_CASE("pump_decomposition") {
  CHECK(pump_decomposition(test::zero_star_one()) == PumpDecomposition{"", "0", "1"});
  CHECK(pump_decomposition(test::zero_one_star()) == PumpDecomposition{"", "01", ""});
  CHECK(code_of([] { pump_decomposition(singleton_dfa("0")); }) == ErrorCode::FiniteLanguage);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Dfa a = random_small(seed, 6, "01", {1, 2});
    if (is_finite(a)) continue;
    const PumpDecomposition p = pump_decomposition(a);
    REQUIRE_FALSE(p.loop.empty());
    CHECK(p.head.size() + p.loop.size() + p.tail.size() <= 2 * a.state_count());
    for (std::size_t k = 0; k <= 3; ++k) REQUIRE(accepts(a, p.pumped(k)));
  }
}

TEST_CASE("absorb_hash_suffix") {
  SUBCASE("singleton 0##") {
    const Dfa out = absorb_hash_suffix(singleton_dfa("0##", "01#"));
    CHECK(out.alphabet() == "01");
    CHECK(brute::accepted_up_to(out, 6) == WordList{"0"});
  }
  SUBCASE("no accepting states") {
    const Dfa in("01#", 1, 0, {}, {0, 0, 0});
    CHECK(brute::accepted_up_to(absorb_hash_suffix(in), 6).empty());
  }
  SUBCASE("sigma* #* becomes sigma*") {
    // 0: reading 0/1, accepting; 1: reading #, accepting; 2: dead.
    const Dfa in("01#", 3, 0, {0, 1}, {0, 0, 1, 2, 2, 1, 2, 2, 2});
    CHECK(brute::accepted_up_to(absorb_hash_suffix(in), 6) == brute::words_up_to("01", 6));
  }
  SUBCASE("hash must be present") {
    CHECK(code_of([] { absorb_hash_suffix(singleton_dfa("0")); }) == ErrorCode::NoHashSymbol);
  }
  SUBCASE("random automata over 01#") {
    const WordList words = brute::words_up_to("01", 8);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Dfa a = random_small(seed, 6, "01#", {1, 4});
      const Dfa out = absorb_hash_suffix(a);
      for (const Word& w : words) REQUIRE(accepts(out, w) == brute::hash_closure_accepts(a, w, 2 * a.state_count()));
    }
  }
}

TEST_CASE("shortest_word") {
  const Dfa a = test::zero_one_star();
  const auto w = shortest_word(a, 0, [&](State q) { return a.is_accepting(q); }, true);
  CHECK(w == Word("01"));
  CHECK(shortest_word(a, 0, [&](State q) { return a.is_accepting(q); }) == Word(""));
  CHECK_FALSE(shortest_word(test::empty_language(), 0, [](State) { return false; }));
}
