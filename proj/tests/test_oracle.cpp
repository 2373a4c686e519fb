#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "random_words.hpp"
#include "simonk/oracle.hpp"

using namespace simonk;
namespace gen = simonk::testing;

namespace {

Word make(const std::string& s) { return Word(s, Alphabet::occurring_in(s)); }

bool set_contains(const SubwordSet& set, const std::string& w) {
  return std::find(set.words.begin(), set.words.end(), w) != set.words.end();
}

}  // namespace

TEST_CASE("subword sets of small words") {
  const SubwordSet s = subwords_up_to(make("ab"), 2);
  CHECK(s.words == std::vector<std::string>{"", "a", "b", "ab"});

  CHECK(set_contains(subwords_up_to(make("bacbaabada"), 3), "cab"));
  CHECK_FALSE(set_contains(subwords_up_to(make("bacbbada"), 3), "cab"));
  CHECK(subwords_up_to(make("bacbaabada"), 3).words !=
        subwords_up_to(make("bacbbada"), 3).words);

  CHECK(subwords_up_to(make("abcabc"), 0).words ==
        std::vector<std::string>{""});
  CHECK(subwords_up_to(Word("", Alphabet("ab")), 5).words ==
        std::vector<std::string>{""});
}

TEST_CASE("subword sets are shortlex-sorted and downward closed") {
  std::mt19937 rng(90);
  for (int it = 0; it < 300; ++it) {
    const Alphabet alpha("abc");
    const Word u(gen::random_symbols(rng, "abc", 0, 8), alpha);
    std::uniform_int_distribution<std::uint64_t> pick_k(0, 5);
    const std::uint64_t k = pick_k(rng);
    const SubwordSet set = subwords_up_to(u, k);
    REQUIRE(!set.words.empty());
    REQUIRE(set.words.front().empty());
    for (std::size_t i = 0; i + 1 < set.words.size(); ++i) {
      const auto& a = set.words[i];
      const auto& b = set.words[i + 1];
      REQUIRE((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
    for (const std::string& w : set.words) {
      REQUIRE(w.size() <= k);
      REQUIRE(is_subword(Word(w, alpha), u));
      if (!w.empty()) {
        for (std::size_t drop = 0; drop < w.size(); ++drop) {
          std::string shorter = w;
          shorter.erase(drop, 1);
          REQUIRE(set_contains(set, shorter));
        }
      }
    }
  }
}

TEST_CASE("subword set membership matches is_subword") {
  const Alphabet ab("ab");
  const auto candidates = gen::all_words("ab", 4);
  for (const auto& s : gen::all_words("ab", 6)) {
    const Word u(s, ab);
    for (std::uint64_t k = 0; k <= 4; ++k) {
      const SubwordSet set = subwords_up_to(u, k);
      for (const auto& c : candidates) {
        const bool expected = c.size() <= k && is_subword(Word(c, ab), u);
        REQUIRE(set_contains(set, c) == expected);
      }
    }
  }
}

TEST_CASE("subword sets grow monotonically in k") {
  std::mt19937 rng(91);
  for (int it = 0; it < 200; ++it) {
    const Word u(gen::random_symbols(rng, "abc", 0, 8), Alphabet("abc"));
    for (std::uint64_t k = 0; k < 4; ++k) {
      const auto small = subwords_up_to(u, k).words;
      const auto large = subwords_up_to(u, k + 1).words;
      for (const auto& w : small) {
        REQUIRE(std::find(large.begin(), large.end(), w) != large.end());
      }
    }
  }
}

TEST_CASE("naive equivalence on the worked examples") {
  const Alphabet ab("ab");
  CHECK(naive_equivalent(Word("ab", ab), Word("ba", ab), 1));
  CHECK_FALSE(naive_equivalent(Word("ab", ab), Word("ba", ab), 2));
  const Alphabet alpha = Alphabet::occurring_in("bacbaabada");
  CHECK(naive_equivalent(Word("bacbaabada", alpha), Word("bacabbda", alpha), 3));
  CHECK_THROWS_AS(
      naive_equivalent(Word("a", Alphabet("a")), Word("b", Alphabet("b")), 1),
      std::invalid_argument);
}

TEST_CASE("naive equivalence is an equivalence relation on a sample") {
  const Alphabet ab("ab");
  const auto words = gen::all_words("ab", 5);
  for (std::uint64_t k = 1; k <= 3; ++k) {
    for (const auto& a : words) {
      REQUIRE(naive_equivalent(Word(a, ab), Word(a, ab), k));
    }
    // Symmetry and transitivity via interned set signatures.
    std::vector<std::vector<std::string>> sigs;
    for (const auto& a : words) {
      sigs.push_back(subwords_up_to(Word(a, ab), k).words);
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        REQUIRE(naive_equivalent(Word(words[i], ab), Word(words[j], ab), k) ==
                (sigs[i] == sigs[j]));
      }
    }
  }
}

TEST_CASE("naive shortlex enumeration") {
  CHECK(naive_shortlex(make("bacbabda"), 3).symbols() == "bacabbda");
  CHECK(naive_shortlex(Word("aa", Alphabet("a")), 1).symbols() == "a");
  CHECK(naive_shortlex(Word("", Alphabet("ab")), 3).symbols() == "");
}

TEST_CASE("naive shortlex output re-verifies as minimal") {
  std::mt19937 rng(92);
  const Alphabet abc("abc");
  const auto all_shorter = gen::all_words("abc", 6);
  for (int it = 0; it < 150; ++it) {
    const Word u(gen::random_symbols(rng, "abc", 0, 6), abc);
    std::uniform_int_distribution<std::uint64_t> pick_k(1, 4);
    const std::uint64_t k = pick_k(rng);
    const Word out = naive_shortlex(u, k);
    REQUIRE(naive_equivalent(out, u, k));
    for (const auto& w : all_shorter) {
      if (w.size() > out.size()) continue;
      if (w == out.symbols()) continue;
      const Word cand(w, abc);
      if (naive_equivalent(cand, u, k)) {
        // Anything equivalent must be longer, or equal length and greater.
        REQUIRE(w.size() == out.size());
        REQUIRE(lex_less(out, cand));
      }
    }
  }
}

TEST_CASE("shortest ranker lengths by breadth-first search") {
  const Word u = make("bacbaabada");
  CHECK(shortest_ranker_length(u, 8, Direction::X) == 4);
  CHECK(shortest_ranker_length(u, 5, Direction::Y) == 3);
  CHECK(shortest_ranker_length(u, 1, Direction::X) == 1);
  CHECK(shortest_ranker_length(u, 9, Direction::X) == 1);  // fresh letter d
  CHECK_THROWS_AS(shortest_ranker_length(u, 0, Direction::X),
                  std::invalid_argument);
  CHECK_THROWS_AS(shortest_ranker_length(u, 11, Direction::X),
                  std::invalid_argument);
}

TEST_CASE("distinguishing subwords") {
  const Alphabet alpha = Alphabet::occurring_in("bacbaabada");
  // "cab" separates the two words as well, but "aab" is the shortlex-least
  // separator: it embeds into bacbaabada at 2,5,7 and has no match in
  // bacbbada, whose late letters a,d,a offer no b after the second a.
  const auto w1 = distinguishing_subword(Word("bacbaabada", alpha),
                                         Word("bacbbada", alpha), 3);
  REQUIRE(w1.has_value());
  CHECK(w1->symbols() == "aab");

  const auto w2 = distinguishing_subword(Word("bacbabda", alpha),
                                         Word("abcbabda", alpha), 3);
  REQUIRE(w2.has_value());
  CHECK(w2->symbols() == "abc");

  const Alphabet ab("ab");
  CHECK_FALSE(
      distinguishing_subword(Word("ab", ab), Word("ab", ab), 2).has_value());
}

TEST_CASE("the witness is the shortlex-least separator") {
  std::mt19937 rng(93);
  const Alphabet ab("ab");
  for (int it = 0; it < 400; ++it) {
    const Word u(gen::random_symbols(rng, "ab", 0, 7), ab);
    const Word v(gen::random_symbols(rng, "ab", 0, 7), ab);
    std::uniform_int_distribution<std::uint64_t> pick_k(1, 4);
    const std::uint64_t k = pick_k(rng);
    const auto witness = distinguishing_subword(u, v, k);
    REQUIRE(witness.has_value() != naive_equivalent(u, v, k));
    if (!witness.has_value()) continue;
    const auto su = subwords_up_to(u, k);
    const auto sv = subwords_up_to(v, k);
    REQUIRE(set_contains(su, witness->symbols()) !=
            set_contains(sv, witness->symbols()));
    // Everything strictly shortlex-smaller lies in both sets or neither.
    for (const auto& w : su.words) {
      if (w.size() > witness->size()) break;
      if (w.size() == witness->size() && !(w < witness->symbols())) continue;
      REQUIRE(set_contains(sv, w));
    }
  }
}

TEST_CASE("oracle guards refuse oversized inputs unless forced") {
  const Word big("abcdefghij", Alphabet("abcdefghij"));
  CHECK_THROWS_AS(subwords_up_to(big, 10), GuardExceeded);
  // Forced: 10 distinct letters have exactly 2^10 subsequences.
  CHECK(subwords_up_to(big, 10, kDefaultSetGuard, true).words.size() == 1024);

  const Word longish("aaaaaaaaaa", Alphabet("a"));
  CHECK_THROWS_AS(naive_shortlex(longish, 1), GuardExceeded);
  CHECK(naive_shortlex(longish, 1, 9, 3, true).symbols() == "a");

  const Word wide("abcde", Alphabet("abcde"));
  CHECK_THROWS_AS(naive_shortlex(wide, 2), GuardExceeded);

  CHECK_THROWS_AS(distinguishing_subword(big, big, 10), GuardExceeded);
  CHECK_THROWS_AS(naive_equivalent(big, big, 10, 100), GuardExceeded);
  CHECK(naive_equivalent(big, big, 2, kDefaultSetGuard));
}
