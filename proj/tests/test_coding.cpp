#include <doctest.h>

#include <set>
#include <tuple>

#include "rr/brute.hpp"
#include "rr/coding.hpp"
#include "rr/error.hpp"
#include "rr/generator.hpp"

using namespace rr;

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

}  // namespace

TEST_CASE("beta") {
  CHECK(beta_encode("01") == "0110");
  CHECK(beta_encode("") == "");
  CHECK(beta_decode("0110") == "01");
  CHECK(code_of([] { beta_decode("0011"); }) == ErrorCode::NotInImage);
  CHECK(code_of([] { beta_decode("011"); }) == ErrorCode::NotInImage);
  for (const Word& x : binary_words_up_to(12)) REQUIRE(beta_decode(beta_encode(x)) == x);
}

TEST_CASE("ex_encode") {
  CHECK(ex_encode("") == "1100011000");
  CHECK(ex_encode("0") == "0111000001110000");
  CHECK(ex_encode("01") == std::string("0110110000000") + "0110110000000");
  CHECK(ex_encode("01").size() == 26);
  for (const Word& x : binary_words_up_to(8)) REQUIRE(ex_encode(x).size() == d_length(x.size()));
}

TEST_CASE("d_length") {
  CHECK(d_length(0) == 10);
  CHECK(d_length(1) == 16);
  CHECK(d_length(3) == 40);
  for (std::uint64_t n = 0; n < 50; ++n) {
    CHECK(half_length(n) * 2 == d_length(n));
    REQUIRE(half_parameter(half_length(n)) == n);
  }
  for (std::uint64_t len = 0; len < 200; ++len) {
    bool is_half = false;
    for (std::uint64_t n = 0; n < 20; ++n) is_half = is_half || half_length(n) == len;
    CHECK(half_parameter(len).has_value() == is_half);
  }
}

TEST_CASE("ex_decode") {
  CHECK(ex_decode("1100011000") == Word(""));
  CHECK_FALSE(ex_decode("0101"));
  CHECK_FALSE(ex_decode("1100011001"));
  CHECK_FALSE(ex_decode(""));
  SUBCASE("every single-bit corruption fails, |x| <= 3") {
    for (const Word& x : binary_words_up_to(3)) {
      const Word w = ex_encode(x);
      REQUIRE(ex_decode(w) == x);
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word bad = w;
        bad[i] ^= 1;
        REQUIRE_FALSE(ex_decode(bad));
      }
    }
  }
  SUBCASE("agrees with the definition table") {
    const brute::DTable table(4);
    for (const Word& w : binary_words_up_to(16)) REQUIRE(in_d(w) == table.in_d(w));
    Rng rng(3);
    for (const Word& x : binary_words_up_to(4)) {
      Word w = ex_encode(x);
      CHECK(table.in_d(w));
      w[rng.below(w.size())] ^= 1;
      CHECK(in_d(w) == table.in_d(w));
    }
  }
  SUBCASE("round trip on long random words") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      const Word x = rng.binary_word(13 + rng.below(30));
      REQUIRE(ex_decode(ex_encode(x)) == x);
    }
  }
}

TEST_CASE("is_half_word") {
  CHECK(is_half_word("11000"));
  CHECK(is_half_word("10110000"));
  CHECK_FALSE(is_half_word("10110"));
  CHECK_FALSE(is_half_word(""));
  CHECK_FALSE(is_half_word("110000"));
  for (const Word& u : binary_words_up_to(12)) REQUIRE(is_half_word(u) == ex_decode(u + u).has_value());
}

TEST_CASE("HalfWordScanner is one pass and its key separates states") {
  std::set<std::uint64_t> keys;
  std::set<std::tuple<int, std::uint32_t, std::uint32_t>> states;
  for (const Word& w : binary_words_up_to(10)) {
    HalfWordScanner s;
    s.feed(w);
    keys.insert(s.key());
    states.emplace(static_cast<int>(s.phase()), s.pairs(), s.zeros());
  }
  CHECK(keys.size() == states.size());
}

TEST_CASE("split_d_prefix") {
  const auto a = split_d_prefix(ex_encode("1") + "1");
  REQUIRE(a);
  CHECK(a->first == ex_encode("1"));
  CHECK(a->second == "1");
  CHECK_FALSE(split_d_prefix("000"));
  CHECK_FALSE(split_d_prefix("00" + ex_encode("")));
  const auto b = split_d_prefix(ex_encode(""));
  REQUIRE(b);
  CHECK(b->first == ex_encode(""));
  CHECK(b->second.empty());

  SUBCASE("matches a brute-force prefix search") {
    const brute::DTable table(4);
    Rng rng(5);
    for (int i = 0; i < 3000; ++i) {
      Word w = rng.below(2) ? ex_encode(rng.binary_word(rng.below(4))) : Word{};
      if (!w.empty() && rng.below(3) == 0) w[rng.below(w.size())] ^= 1;
      w += rng.binary_word(rng.below(6));
      const auto split = split_d_prefix(w);
      const auto expected = table.d_prefix(w);
      REQUIRE(split.has_value() == expected.has_value());
      if (split) {
        CHECK(split->first == *expected);
        CHECK(split->first + split->second == w);
      }
    }
  }
}

TEST_CASE("is_prefix_of_d_word") {
  for (const Word& x : binary_words_up_to(3)) {
    const Word w = ex_encode(x);
    for (std::size_t i = 0; i <= w.size(); ++i) REQUIRE(is_prefix_of_d_word(w.substr(0, i)));
    CHECK_FALSE(is_prefix_of_d_word(w + "0"));
  }
  CHECK_FALSE(is_prefix_of_d_word("00"));
  CHECK(is_prefix_of_d_word("0101"));
}

TEST_CASE("antichain and common prefix structure") {
  const WordList xs = binary_words_up_to(5);
  for (const Word& x : xs)
    for (const Word& y : xs) {
      if (x == y) continue;
      const Word ex = ex_encode(x), ey = ex_encode(y);
      REQUIRE_FALSE(ey.starts_with(ex));
      std::size_t p = 0;
      while (p < ex.size() && p < ey.size() && ex[p] == ey[p]) ++p;
      // The common prefix is beta(z) or beta(z) followed by one symbol.
      const Word common = ex.substr(0, p - p % 2);
      CHECK_NOTHROW(beta_decode(common));
    }
}

TEST_CASE("pairing") {
  CHECK(pair_split("") == std::make_pair(Word(""), Word("0")));
  CHECK(pair_split("0") == std::make_pair(Word("0"), Word("0")));
  CHECK(pair_split("1") == std::make_pair(Word(""), Word("1")));
  CHECK(code_of([] { pair_join("0", ""); }) == ErrorCode::EmptySecondComponent);

  SUBCASE("enumeration of the pairing table") {
    // Ranks: eps 0, 0 1, 1 2, 00 3, ... Diagonal order of (a, b): (0,0), (1,0), (0,1), (2,0), ...
    const WordList words = binary_words_up_to(6);
    std::size_t z = 0;
    for (std::size_t diagonal = 0; z < words.size(); ++diagonal)
      for (std::size_t b = 0; b <= diagonal && z < words.size(); ++b, ++z) {
        const std::size_t a = diagonal - b;
        REQUIRE(pair_split(words[z]) == std::make_pair(words[a], words[b + 1]));
      }
  }
  SUBCASE("mutually inverse") {
    std::set<Word> images;
    for (const Word& x : binary_words_up_to(6))
      for (const Word& y : binary_words_up_to(6)) {
        if (y.empty()) continue;
        const Word w = pair_join(x, y);
        REQUIRE(pair_split(w) == std::make_pair(x, y));
        images.insert(w);
      }
    CHECK(images.size() == 127 * 126);
    for (const Word& w : binary_words_up_to(12)) {
      const auto [x, y] = pair_split(w);
      REQUIRE(pair_join(x, y) == w);
    }
  }
  SUBCASE("long words beyond 64-bit ranks") {
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
      const Word w = rng.binary_word(70 + rng.below(60));
      const auto [x, y] = pair_split(w);
      REQUIRE(pair_join(x, y) == w);
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi_encode("", "0") == "00");
  CHECK(phi_encode("0", "1") == "0111");
  CHECK(phi_encode("10", "011") == "1001" "00" "11");
  CHECK(code_of([] { phi_decode("0101"); }) == ErrorCode::NotInImage);
  CHECK(code_of([] { phi_encode("0", ""); }) == ErrorCode::EmptySecondComponent);
  for (const Word& x : binary_words_up_to(4))
    for (const Word& y : binary_words_up_to(4)) {
      if (y.empty()) continue;
      REQUIRE(phi_decode(phi_encode(x, y)) == std::make_pair(x, y));
    }
}

TEST_CASE("cofinite bijection") {
  const CofiniteBijection f({"0"});
  CHECK(f.block_length() == 2);
  CHECK(f.marked() == WordList{"00"});
  CHECK(f.apply("0") == "100");
  CHECK(f.apply("100") == "0100");
  CHECK(f.apply("1") == "1");
  CHECK(f.invert("100") == "0");
  CHECK(f.invert("0100") == "100");
  CHECK(code_of([&] { f.invert("0"); }) == ErrorCode::NotInImage);

  const CofiniteBijection g({"11", "0", "", "0"});
  CHECK(g.excluded() == WordList{"", "0", "11"});
  CHECK(g.block_length() == 3);
  CHECK(g.marked() == WordList{"000", "001", "010"});
  CHECK(g.apply("") == "1000");
  CHECK(g.apply("11") == "1010");

  const CofiniteBijection none({});
  CHECK(none.block_length() == 1);
  CHECK(none.apply("0101") == "0101");
}

TEST_CASE("dex") {
  CHECK(dex_encode("") == "");
  CHECK(dex_encode("0") == "1100011000");
  CHECK(dex_encode("1") == ex_encode("") + "0");
  CHECK(dex_encode("11") == ex_encode("") + "1");
  CHECK(dex_encode("10") == ex_encode("0") + "0");
  CHECK(dex_decode(ex_encode("") + "0") == "1");
  CHECK(dex_decode(ex_encode("0") + "0") == "10");
  CHECK(dex_decode(ex_encode("0")) == "00");
  CHECK(code_of([] { dex_decode("00"); }) == ErrorCode::NotInImage);

  SUBCASE("injective round trip, every word up to length 10") {
    std::set<Word> images;
    for (const Word& x : binary_words_up_to(10)) {
      const Word w = dex_encode(x);
      REQUIRE(dex_decode(w) == x);
      images.insert(w);
      if (x.empty()) continue;
      const auto split = split_d_prefix(w);
      REQUIRE(split);
      CHECK(split->second.empty() == (x[0] == '0'));
    }
    CHECK(images.size() == binary_words_up_to(10).size());
  }
}
