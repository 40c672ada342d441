#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "monoidcats/perm.hpp"

using namespace monoidcats;

namespace {

const AlphabetPtr kAbc = make_alphabet("abc");

// Independent oracle: scan all permutations for one with u = v o p.
std::optional<Permutation> brute_force_witness(const Word& u, const Word& v) {
  if (u.length() != v.length()) return std::nullopt;
  std::vector<std::size_t> p(u.length());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < u.length() && ok; ++i) {
      ok = u[i] == v[p[i]];
    }
    if (ok) return Permutation(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

}  // namespace

TEST_CASE("permutation construction and notation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), MalformedInput);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::identity(3).cycles() == "()");
  Permutation s = Permutation::from_cycles(9, "(2 3 6 4)");
  CHECK(s.map() == std::vector<std::size_t>{0, 1, 3, 6, 2, 5, 4, 7, 8});
  CHECK(s.cycles() == "(2 3 6 4)");
  CHECK(s.one_line() == "[0,1,3,6,2,5,4,7,8]");
  CHECK(Permutation::from_cycles(9, "(0 2 6 4 5 7)(1 3 8)").cycles() ==
        "(0 2 6 4 5 7)(1 3 8)");
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 5)"), IndexOutOfRange);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1)(1 2)"), MalformedInput);
}

TEST_CASE("composition and inverse") {
  Permutation s = Permutation::from_cycles(5, "(0 1 2)");
  Permutation t = Permutation::from_cycles(5, "(3 4)");
  CHECK(compose(s, invert(s)).is_identity());
  CHECK(compose(invert(s), s).is_identity());
  CHECK(compose(s, t) == compose(t, s));  // disjoint cycles commute
  CHECK_THROWS_AS(compose(s, Permutation::identity(4)), SizeMismatch);
}

TEST_CASE("occ and pos on the worked example") {
  Word a = Word::parse(kAbc, "abbbaacab");
  CHECK(occ(a, 5) == 2);
  CHECK(pos(a, "a", 2) == 5);
  CHECK(occ(a, 0) == 0);
  CHECK(occ(a, 8) == 3);  // fourth b
  CHECK(pos(a, "c", 0) == 6);
  CHECK_THROWS_AS(occ(a, 9), IndexOutOfRange);
  CHECK_THROWS_AS(pos(a, "c", 1), OccurrenceOutOfRange);
  CHECK_THROWS_AS(pos(a, "z", 0), UnknownLetter);

  // occ and pos are mutually inverse per letter
  for (std::size_t i = 0; i < a.length(); ++i) {
    CHECK(pos(a, a[i], occ(a, i)) == i);
  }
}

TEST_CASE("canonical permutation of the worked example") {
  Word a = Word::parse(kAbc, "abbbaacab");
  Word b = Word::parse(kAbc, "ababcabab");
  Permutation s = canonical_perm(a, b);
  CHECK(s.cycles() == "(2 3 6 4)");
  CHECK(s.map() == std::vector<std::size_t>{0, 1, 3, 6, 2, 5, 4, 7, 8});
  CHECK(invert(s).map() == std::vector<std::size_t>{0, 1, 4, 2, 6, 5, 3, 7, 8});
  CHECK(apply_right_action(b, s) == a);

  // two non-canonical witnesses also satisfy a = b o perm
  CHECK(apply_right_action(b, Permutation::from_cycles(9, "(0 5 2 1 3 6 4)")) == a);
  CHECK(apply_right_action(b, Permutation::from_cycles(9, "(0 2 6 4 5 7)(1 3 8)")) == a);
}

TEST_CASE("canonical permutation laws") {
  Word a = Word::parse(kAbc, "abbbaacab");
  Word b = Word::parse(kAbc, "ababcabab");
  Word c = Word::parse(kAbc, "babacabab");
  REQUIRE(equiv(a, c));
  CHECK(canonical_perm(a, a).is_identity());
  CHECK(compose(canonical_perm(b, c), canonical_perm(a, b)) == canonical_perm(a, c));
  CHECK(invert(canonical_perm(a, b)) == canonical_perm(b, a));
  // transport identities
  Permutation s = canonical_perm(a, b);
  for (std::size_t i = 0; i < a.length(); ++i) {
    CHECK(occ(a, i) == occ(b, s(i)));
  }
  Permutation sb = canonical_perm(b, a);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t j = 0; j < count(a, x); ++j) {
      CHECK(pos(a, x, j) == sb(pos(b, x, j)));
    }
  }
  CHECK_THROWS_AS(canonical_perm(a, Word::parse(kAbc, "aaaaaaaaa")), NotEquivalent);
}

TEST_CASE("equiv agrees with brute-force permutation search (small scan)") {
  AlphabetPtr ab = make_alphabet("ab");
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 4; ++len) {
    std::vector<std::size_t> entries(len, 0);
    while (true) {
      words.emplace_back(ab, entries);
      std::size_t k = len;
      while (k > 0 && entries[k - 1] == 1) entries[--k] = 0;
      if (k == 0) break;
      ++entries[k - 1];
    }
  }
  for (const Word& u : words) {
    for (const Word& v : words) {
      auto witness = brute_force_witness(u, v);
      CHECK(equiv(u, v) == witness.has_value());
      if (witness) {
        Permutation s = canonical_perm(u, v);
        CHECK(apply_right_action(v, s) == u);
      }
    }
  }
}
