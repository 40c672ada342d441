#include <doctest.h>

#include <set>
#include <vector>

#include "monoidcats/cat_c.hpp"

using namespace monoidcats;

namespace {

const AlphabetPtr kAbc = make_alphabet("abc");

// Independent oracle: generate every function {0..|a|-1} -> {0..|b|-1} and
// keep the ones satisfying a = b o phi.
std::vector<std::vector<std::size_t>> all_morphism_maps(const Word& a, const Word& b) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> map(a.length(), 0);
  if (a.is_empty()) return {map};
  if (b.is_empty()) return out;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < a.length() && ok; ++i) ok = a[i] == b[map[i]];
    if (ok) out.push_back(map);
    std::size_t k = a.length();
    while (k > 0 && map[k - 1] + 1 == b.length()) map[--k] = 0;
    if (k == 0) break;
    ++map[k - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("morphism validation") {
  Word ab = Word::parse(kAbc, "ab");
  Word aab = Word::parse(kAbc, "aab");
  CHECK(check_morphism(ab, aab, {0, 2}).map() == std::vector<std::size_t>{0, 2});
  CHECK(check_morphism(ab, aab, {1, 2}).map() == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(check_morphism(ab, aab, {2, 2}), NotAMorphism);
  CHECK_THROWS_AS(check_morphism(ab, aab, {0}), LengthMismatch);
  CHECK_THROWS_AS(check_morphism(ab, aab, {0, 3}), IndexOutOfRange);
  try {
    check_morphism(ab, aab, {0, 0});
  } catch (const NotAMorphism& e) {
    CHECK(e.index == 1);  // first violating position
  }
}

TEST_CASE("hom cardinality formula") {
  Word a = Word::parse(kAbc, "abbbaacab");
  Word b = Word::parse(kAbc, "ababcabab");
  CHECK(hom_cardinality(a, b) == 65536);  // 4^4 * 4^4 * 1^1
  CHECK(hom_cardinality(Word::empty(kAbc), Word::empty(kAbc)) == 1);
  CHECK(hom_cardinality(Word::empty(kAbc), a) == 1);
  CHECK(hom_cardinality(Word::parse(kAbc, "a"), Word::empty(kAbc)) == 0);
  CHECK(hom_cardinality(Word::parse(kAbc, "ab"), Word::parse(kAbc, "aab")) == 2);
  // overflow: 21^21 > 2^64
  AlphabetPtr one = make_alphabet("a");
  Word big(one, std::vector<std::size_t>(21, 0));
  CHECK_THROWS_AS(hom_cardinality(big, big), Overflow);
}

TEST_CASE("hom enumeration matches the exhaustive oracle") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {"ab", "aab"},  {"aab", "ab"}, {"ab", "ba"},   {"abc", "abc"},
      {"aa", "aaa"},  {"_", "ab"},   {"a", "_"},     {"abab", "ab"},
      {"bca", "abcabc"}};
  for (const auto& [as, bs] : cases) {
    CAPTURE(as);
    CAPTURE(bs);
    Word a = as == "_" ? Word::empty(kAbc) : Word::parse(kAbc, as);
    Word b = bs == "_" ? Word::empty(kAbc) : Word::parse(kAbc, bs);
    auto oracle = all_morphism_maps(a, b);
    auto got = enumerate_hom(a, b);
    REQUIRE(got.size() == oracle.size());
    CHECK(got.size() == hom_cardinality(a, b));
    std::set<std::vector<std::size_t>> oracle_set(oracle.begin(), oracle.end());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(oracle_set.count(got[i].map()) == 1);
      if (i > 0) CHECK(got[i - 1].map() < got[i].map());  // lexicographic order
    }
  }
}

TEST_CASE("enumeration cap") {
  Word a = Word::parse(kAbc, "aaaa");
  Word b = Word::parse(kAbc, "aaaa");
  CHECK(enumerate_hom(a, b, 256).size() == 256);
  CHECK_THROWS_AS(enumerate_hom(a, b, 255), CapExceeded);
}

TEST_CASE("category laws on small homs") {
  Word ab = Word::parse(kAbc, "ab");
  Word aab = Word::parse(kAbc, "aab");
  Word aabb = Word::parse(kAbc, "aabb");
  for (const auto& phi : enumerate_hom(ab, aab)) {
    CHECK(compose(identity(aab), phi) == phi);
    CHECK(compose(phi, identity(ab)) == phi);
    for (const auto& psi : enumerate_hom(aab, aabb)) {
      CMorphism gf = compose(psi, phi);
      CHECK(gf.dom() == ab);
      CHECK(gf.cod() == aabb);
      for (const auto& chi : enumerate_hom(aabb, aab)) {
        CHECK(compose(chi, compose(psi, phi)) == compose(compose(chi, psi), phi));
      }
    }
  }
  CHECK_THROWS_AS(compose(identity(ab), identity(aab)), NotComposable);
}

TEST_CASE("isomorphisms are the permutation morphisms") {
  Word ab = Word::parse(kAbc, "ab");
  Word ba = Word::parse(kAbc, "ba");
  CMorphism swap = from_permutation(ab, ba, canonical_perm(ab, ba));
  CHECK(is_iso(swap));
  CHECK(swap.map() == std::vector<std::size_t>{1, 0});
  CHECK_FALSE(is_iso(check_morphism(ab, Word::parse(kAbc, "aab"), {0, 2})));
  CHECK(is_iso(identity(ab)));
}

TEST_CASE("relabeling functor") {
  AlphabetPtr xy = make_alphabet("xy");
  LetterMap f = LetterMap::from_names(kAbc, xy, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
  Word ab = Word::parse(kAbc, "ab");
  Word aab = Word::parse(kAbc, "aab");
  CHECK(functor_c_obj(f, ab).str() == "xx");
  CMorphism phi = check_morphism(ab, aab, {1, 2});
  CMorphism fphi = functor_c_mor(f, phi);
  CHECK(fphi.map() == phi.map());
  CHECK(fphi.dom() == functor_c_obj(f, ab));
  // functor laws
  CHECK(functor_c_mor(f, identity(ab)) == identity(functor_c_obj(f, ab)));
  for (const auto& psi : enumerate_hom(aab, Word::parse(kAbc, "aabb"))) {
    CHECK(functor_c_mor(f, compose(psi, phi)) ==
          compose(functor_c_mor(f, psi), functor_c_mor(f, phi)));
  }
}
