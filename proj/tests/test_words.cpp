#include <doctest.h>

#include "monoidcats/words.hpp"

using namespace monoidcats;

namespace {
const AlphabetPtr kAbc = make_alphabet("abc");
}

TEST_CASE("alphabet basics") {
  CHECK(kAbc->size() == 3);
  CHECK(kAbc->letter(1) == "b");
  CHECK(kAbc->index_of("c") == 2);
  CHECK(kAbc->contains("a"));
  CHECK_FALSE(kAbc->contains("z"));
  CHECK_THROWS_AS(kAbc->index_of("z"), UnknownLetter);
  CHECK(kAbc->single_char());
  CHECK_FALSE(make_alphabet(std::vector<std::string>{"up", "down"})->single_char());
  CHECK_THROWS_AS(make_alphabet(std::vector<std::string>{"a", "a"}), MalformedInput);
  CHECK_THROWS_AS(make_alphabet(std::vector<std::string>{""}), MalformedInput);
}

TEST_CASE("word construction and rendering") {
  Word w = Word::parse(kAbc, "abbbaacab");
  CHECK(w.length() == 9);
  CHECK(w.str() == "abbbaacab");
  CHECK(w.letter_at(6) == "c");
  CHECK(Word::empty(kAbc).str() == "_");
  CHECK_THROWS_AS(Word::parse(kAbc, "abz"), UnknownLetter);
  CHECK_THROWS_AS(w.at(9), IndexOutOfRange);

  Word named = Word::from_letters(make_alphabet(std::vector<std::string>{"up", "down"}), {"down", "up"});
  CHECK(named.str() == "down.up");
}

TEST_CASE("concatenation is monoidal") {
  Word u = Word::parse(kAbc, "ab");
  Word v = Word::parse(kAbc, "c");
  Word w = Word::parse(kAbc, "ba");
  Word e = Word::empty(kAbc);
  CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
  CHECK(concat(u, e) == u);
  CHECK(concat(e, u) == u);
  CHECK(length(concat(u, w)) == length(u) + length(w));
  CHECK(count(concat(u, w), "a") == count(u, "a") + count(w, "a"));
  CHECK_THROWS_AS(concat(u, Word::parse(make_alphabet("xy"), "x")),
                  AlphabetMismatch);
}

TEST_CASE("worked example counts") {
  Word a = Word::parse(kAbc, "abbbaacab");
  CHECK(length(a) == 9);
  CHECK(count(a, "a") == 4);
  CHECK(count(a, "b") == 4);
  CHECK(count(a, "c") == 1);
}

TEST_CASE("subwords decompose the word") {
  Word w = Word::parse(kAbc, "abbbaacab");
  CHECK(subword(w, 0, 2).str() == "abb");
  CHECK(subword(w, 4, 4).str() == "a");
  CHECK(concat(subword(w, 0, 3), subword(w, 4, 8)) == w);
  CHECK_THROWS_AS(subword(w, 3, 2), IndexOutOfRange);
  CHECK_THROWS_AS(subword(w, 0, 9), IndexOutOfRange);
}

TEST_CASE("letter maps and word relabeling") {
  AlphabetPtr xy = make_alphabet("xy");
  LetterMap f = LetterMap::from_names(kAbc, xy, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
  Word a = Word::parse(kAbc, "abbbaacab");
  CHECK(map_word(f, a).str() == "xxxxxxyxx");
  CHECK(map_word(LetterMap::identity(kAbc), a) == a);

  Word u = Word::parse(kAbc, "ab");
  Word v = Word::parse(kAbc, "ca");
  CHECK(map_word(f, concat(u, v)) == concat(map_word(f, u), map_word(f, v)));

  AlphabetPtr z = make_alphabet("z");
  LetterMap g = LetterMap::from_names(xy, z, {{"x", "z"}, {"y", "z"}});
  CHECK(map_word(compose(g, f), a) == map_word(g, map_word(f, a)));
}

TEST_CASE("letter-count equivalence") {
  CHECK(equiv(Word::parse(kAbc, "abbbaacab"), Word::parse(kAbc, "ababcabab")));
  CHECK(equiv(Word::parse(kAbc, "ab"), Word::parse(kAbc, "ba")));
  CHECK_FALSE(equiv(Word::parse(kAbc, "ab"), Word::parse(kAbc, "bb")));
  CHECK_FALSE(equiv(Word::parse(kAbc, "ab"), Word::parse(kAbc, "aba")));
  CHECK(equiv(Word::empty(kAbc), Word::empty(kAbc)));
}

TEST_CASE("equivalence is a congruence for concatenation") {
  Word u = Word::parse(kAbc, "abc");
  Word u2 = Word::parse(kAbc, "cba");
  Word v = Word::parse(kAbc, "bb");
  Word v2 = Word::parse(kAbc, "bb");
  REQUIRE(equiv(u, u2));
  CHECK(equiv(concat(u, v), concat(u2, v2)));
}

TEST_CASE("parikh vectors") {
  Word a = Word::parse(kAbc, "abbbaacab");
  ParikhVector p = parikh(a);
  CHECK(p.count("a") == 4);
  CHECK(p.count("b") == 4);
  CHECK(p.count("c") == 1);
  CHECK(parikh_to_canonical_word(p).str() == "aaaabbbbc");
  CHECK(parikh(concat(a, a)) == p + p);
  CHECK((parikh(a) == parikh(Word::parse(kAbc, "ababcabab"))));
  // canonical word of the canonical word is itself
  Word c = parikh_to_canonical_word(p);
  CHECK(parikh_to_canonical_word(parikh(c)) == c);
}

TEST_CASE("monoid fold") {
  MonoidSpec<std::size_t> add{0, [](const std::size_t& x, const std::size_t& y) {
                                return x + y;
                              }};
  Word a = Word::parse(kAbc, "abbbaacab");
  // every letter weighs 1: the fold is the length
  CHECK(lift_to_monoid<std::size_t>(add, [](std::size_t) { return std::size_t{1}; },
                                    a) == 9);
  // letter 'b' weighs 1, others 0: the fold is the count of b
  CHECK(lift_to_monoid<std::size_t>(
            add, [](std::size_t i) { return std::size_t{i == 1 ? 1u : 0u}; }, a) ==
        4);
  // folding into the word monoid with unit letters is the identity
  MonoidSpec<Word> wm{Word::empty(kAbc),
                      [](const Word& x, const Word& y) { return concat(x, y); }};
  CHECK(lift_to_monoid<Word>(wm,
                             [&](std::size_t i) {
                               return Word(kAbc, {i});
                             },
                             a) == a);
}
