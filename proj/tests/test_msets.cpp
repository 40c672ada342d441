#include <doctest.h>

#include "monoidcats/msets.hpp"

using namespace monoidcats;

namespace {

const AlphabetPtr kAbc = make_alphabet("abc");
const AlphabetPtr kXy = make_alphabet("xy");

LetterMap merge_map() {
  return LetterMap::from_names(kAbc, kXy, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
}

SortedSet sample_set() {
  SortedSet x(kAbc);
  x.add("a", Element::atom(0));
  x.add("a", Element::atom(1));
  x.add("b", Element::atom(0));
  x.add("c", Element::atom(7));
  return x;
}

}  // namespace

TEST_CASE("elements order and render") {
  Element a0 = Element::atom(0);
  Element a1 = Element::atom(1);
  Element t = Element::tagged(a0, "a");
  CHECK(a0 < a1);
  CHECK(a1 < t);  // atoms sort before tagged elements
  CHECK(t.str() == "(0,a)");
  CHECK(Element::tagged(t, "b").str() == "((0,a),b)");
  CHECK_THROWS_AS(a0.inner(), MalformedElement);
  CHECK_THROWS_AS(t.atom_value(), MalformedElement);
}

TEST_CASE("sorted sets") {
  SortedSet x = sample_set();
  CHECK(x.card() == 4);
  CHECK(x.supp() == std::vector<std::size_t>{0, 1, 2});
  CHECK(x.part("a").size() == 2);
  CHECK(x.contains(2, Element::atom(7)));
  CHECK_FALSE(x.contains(1, Element::atom(7)));
}

TEST_CASE("sorted mappings validate") {
  SortedSet x = sample_set();
  CHECK(SortedMapping::identity(x).is_bijective());
  // non-total component
  std::vector<std::map<Element, Element>> comps(3);
  comps[0].emplace(Element::atom(0), Element::atom(0));
  CHECK_THROWS_AS(SortedMapping(x, x, comps), SortMismatch);
}

TEST_CASE("reindexing is a functor") {
  LetterMap f = merge_map();
  SortedSet x = sample_set();
  SortedSet fx = coproduct_obj(f, x);
  CHECK(fx.card() == x.card());
  CHECK(fx.part("x").size() == 3);  // fibers of a and b merge
  CHECK(fx.part("y").size() == 1);
  CHECK(fx.contains(0, Element::tagged(Element::atom(1), "a")));
  CHECK(fx.contains(1, Element::tagged(Element::atom(7), "c")));

  SortedMapping idm = SortedMapping::identity(x);
  CHECK(coproduct_mor(f, idm) == SortedMapping::identity(fx));

  // composition through a second mapping x -> x that swaps the a-part
  std::vector<std::map<Element, Element>> comps(3);
  comps[0].emplace(Element::atom(0), Element::atom(1));
  comps[0].emplace(Element::atom(1), Element::atom(0));
  comps[1].emplace(Element::atom(0), Element::atom(0));
  comps[2].emplace(Element::atom(7), Element::atom(7));
  SortedMapping h(x, x, comps);
  CHECK(coproduct_mor(f, compose(h, h)) ==
        compose(coproduct_mor(f, h), coproduct_mor(f, h)));
}

TEST_CASE("pr strips identity tags") {
  SortedSet x = sample_set();
  SortedMapping pr = pr_iso(x);
  CHECK(pr.is_bijective());
  CHECK(pr.dom() == coproduct_obj(LetterMap::identity(kAbc), x));
  CHECK(pr.cod() == x);
  CHECK(pr.apply(0, Element::tagged(Element::atom(1), "a")) == Element::atom(1));
}

TEST_CASE("alpha reassociates two-step reindexing") {
  LetterMap f = merge_map();
  AlphabetPtr z = make_alphabet("z");
  LetterMap g = LetterMap::from_names(kXy, z, {{"x", "z"}, {"y", "z"}});
  SortedSet x = sample_set();
  SortedMapping alpha = alpha_iso(f, g, x);
  CHECK(alpha.is_bijective());
  CHECK(alpha.dom() == coproduct_obj(compose(g, f), x));
  CHECK(alpha.cod() == coproduct_obj(g, coproduct_obj(f, x)));
  Element e = Element::tagged(Element::atom(7), "c");
  CHECK(alpha.apply(0, e) ==
        Element::tagged(Element::tagged(Element::atom(7), "c"), "y"));
}

TEST_CASE("position-set functor on words") {
  Word ab = Word::parse(kAbc, "ab");
  Word aab = Word::parse(kAbc, "aab");
  SortedSet v = vs_obj(aab);
  CHECK(v.part("a").size() == 2);
  CHECK(v.part("b").size() == 1);
  CHECK(v.contains(0, Element::atom(1)));  // positions are atoms
  CHECK(v.part("c").empty());

  CMorphism phi = check_morphism(ab, aab, {1, 2});
  SortedMapping h = vs_mor(phi);
  CHECK(h.apply(0, Element::atom(0)) == Element::atom(1));
  CHECK(h.apply(1, Element::atom(1)) == Element::atom(2));
  // functor laws
  CHECK(vs_mor(identity(aab)) == SortedMapping::identity(v));
  for (const auto& psi : enumerate_hom(aab, Word::parse(kAbc, "aabb"))) {
    CHECK(vs_mor(compose(psi, phi)) == compose(vs_mor(psi), vs_mor(phi)));
  }
}

TEST_CASE("fullness and faithfulness of the position-set functor") {
  Word ab = Word::parse(kAbc, "ab");
  Word aab = Word::parse(kAbc, "aab");
  for (const auto& phi : enumerate_hom(ab, aab)) {
    CHECK(vs_full_inverse(ab, aab, vs_mor(phi)) == phi);
  }
  // faithful: distinct morphisms give distinct mappings
  auto homs = enumerate_hom(ab, aab);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = i + 1; j < homs.size(); ++j) {
      CHECK_FALSE(vs_mor(homs[i]) == vs_mor(homs[j]));
    }
  }
}

TEST_CASE("essential surjectivity witness") {
  SortedSet x = sample_set();
  Word w = sorted_set_to_word(x);
  CHECK(w.str() == "aabc");
  SortedMapping witness = sorted_set_to_word_witness(x);
  CHECK(witness.is_bijective());
  CHECK(witness.dom() == x);
  CHECK(witness.cod() == vs_obj(w));
  CHECK(witness.apply(2, Element::atom(7)) == Element::atom(3));  // c sits last
}

TEST_CASE("beta relates reindexing and relabeling") {
  LetterMap f = merge_map();
  Word aab = Word::parse(kAbc, "aab");
  SortedMapping beta = beta_iso(f, aab);
  CHECK(beta.is_bijective());
  CHECK(beta.dom() == coproduct_obj(f, vs_obj(aab)));
  CHECK(beta.cod() == vs_obj(functor_c_obj(f, aab)));
  CHECK(beta.apply(0, Element::tagged(Element::atom(2), "b")) == Element::atom(2));
}
