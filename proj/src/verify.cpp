#include "monoidcats/verify.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "monoidcats/cat_c.hpp"
#include "monoidcats/msets.hpp"
#include "monoidcats/perm.hpp"
#include "monoidcats/quotient_q.hpp"
#include "monoidcats/words.hpp"

namespace monoidcats::verify {

namespace {

// Reduction by modulo keeps the draw sequence identical across platforms;
// std::uniform_int_distribution is not pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }
  std::size_t in(std::size_t lo, std::size_t hi) {  // inclusive bounds
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

AlphabetPtr random_alphabet(Rng& rng, std::size_t max_size = 4) {
  static const std::string pool = "abcd";
  std::size_t n = rng.in(1, max_size);
  return make_alphabet(pool.substr(0, n));
}

Word random_word(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_len = 12) {
  std::size_t len = rng.below(max_len + 1);
  std::vector<std::size_t> entries(len);
  for (auto& e : entries) e = rng.below(alphabet->size());
  return Word(alphabet, std::move(entries));
}

Word shuffled(Rng& rng, const Word& w) {
  std::vector<std::size_t> entries = w.entries();
  for (std::size_t i = entries.size(); i > 1; --i) {
    std::swap(entries[i - 1], entries[rng.below(i)]);
  }
  return Word(w.alphabet_ptr(), std::move(entries));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(map[i - 1], map[rng.below(i)]);
  }
  return Permutation(std::move(map));
}

LetterMap random_letter_map(Rng& rng, const AlphabetPtr& dom,
                            const AlphabetPtr& cod) {
  std::vector<std::size_t> images(dom->size());
  for (auto& b : images) b = rng.below(cod->size());
  return LetterMap(dom, cod, std::move(images));
}

// A random morphism a -> b: b is free, a only uses letters present in b, and
// every position maps into its fiber.
CMorphism random_cmorphism(Rng& rng, const AlphabetPtr& alphabet,
                           std::size_t max_len = 8) {
  Word b = random_word(rng, alphabet, max_len);
  while (b.is_empty()) b = random_word(rng, alphabet, max_len);
  std::vector<std::vector<std::size_t>> fibers(alphabet->size());
  for (std::size_t j = 0; j < b.length(); ++j) fibers[b[j]].push_back(j);
  std::vector<std::size_t> present;
  for (std::size_t x = 0; x < fibers.size(); ++x) {
    if (!fibers[x].empty()) present.push_back(x);
  }
  std::size_t len = rng.below(max_len + 1);
  std::vector<std::size_t> entries(len), map(len);
  for (std::size_t i = 0; i < len; ++i) {
    entries[i] = present[rng.below(present.size())];
    const auto& fiber = fibers[entries[i]];
    map[i] = fiber[rng.below(fiber.size())];
  }
  return CMorphism(Word(alphabet, std::move(entries)), b, std::move(map));
}

SortedSet random_sorted_set(Rng& rng, const AlphabetPtr& alphabet,
                            std::size_t max_part = 4) {
  SortedSet x(alphabet);
  for (std::size_t s = 0; s < alphabet->size(); ++s) {
    std::size_t n = rng.below(max_part + 1);
    for (std::size_t k = 0; k < n; ++k) {
      x.add(s, Element::atom(rng.below(2 * max_part)));
    }
  }
  return x;
}

// A total mapping X -> Y; Y is regenerated so every needed part is nonempty.
SortedMapping random_sorted_mapping(Rng& rng, const SortedSet& x) {
  SortedSet y(x.alphabet_ptr());
  for (std::size_t s = 0; s < x.alphabet().size(); ++s) {
    std::size_t n = rng.in(x.part(s).empty() ? 0 : 1, 4);
    for (std::size_t k = 0; k < n; ++k) {
      y.add(s, Element::atom(rng.below(8)));
    }
  }
  std::vector<std::map<Element, Element>> comps(x.alphabet().size());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    std::vector<Element> targets(y.part(s).begin(), y.part(s).end());
    for (const auto& e : x.part(s)) {
      comps[s].emplace(e, targets[rng.below(targets.size())]);
    }
  }
  return SortedMapping(x, std::move(y), std::move(comps));
}

using Check = std::function<std::optional<std::string>(Rng&)>;

struct Runner {
  const Options& options;
  Summary summary;
  std::ostringstream out;

  void run(const std::string& suite, const std::string& name, const Check& check) {
    Rng rng(options.seed ^ std::hash<std::string>{}(suite + "/" + name));
    std::optional<std::string> failure;
    for (std::size_t t = 0; t < options.trials && !failure; ++t) {
      failure = check(rng);
      if (failure) {
        failure = "trial " + std::to_string(t) + ": " + *failure;
      }
    }
    ++summary.checks;
    out << suite << " " << name << " trials=" << options.trials;
    if (failure) {
      ++summary.failures;
      summary.pass = false;
      out << " FAIL (" << *failure << ")\n";
    } else {
      out << " PASS\n";
    }
  }
};

std::optional<std::string> ok() { return std::nullopt; }

std::optional<std::string> fail(const std::string& what) { return what; }

void add_laws_suite(Runner& r) {
  const std::string s = "laws";

  r.run(s, "concat_assoc_unit", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word u = random_word(rng, alpha), v = random_word(rng, alpha),
         w = random_word(rng, alpha);
    if (!(concat(concat(u, v), w) == concat(u, concat(v, w)))) {
      return fail("associativity: " + u.str() + "," + v.str() + "," + w.str());
    }
    Word e = Word::empty(alpha);
    if (!(concat(e, u) == u) || !(concat(u, e) == u)) {
      return fail("unit law: " + u.str());
    }
    return ok();
  });

  r.run(s, "length_count_homomorphisms", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word u = random_word(rng, alpha), v = random_word(rng, alpha);
    Word uv = concat(u, v);
    if (length(uv) != length(u) + length(v)) return fail("length not additive");
    std::size_t total = 0;
    for (std::size_t x = 0; x < alpha->size(); ++x) {
      if (count(uv, x) != count(u, x) + count(v, x)) {
        return fail("count not additive at letter " + alpha->letter(x));
      }
      total += count(uv, x);
    }
    if (total != length(uv)) return fail("counts do not sum to length");
    return ok();
  });

  r.run(s, "subword_decomposition", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word w = random_word(rng, alpha);
    if (w.length() < 1) return ok();
    std::size_t k = rng.below(w.length());
    std::size_t l = rng.in(k, w.length() - 1);
    Word mid = subword(w, k, l);
    Word rebuilt = mid;
    if (k > 0) rebuilt = concat(subword(w, 0, k - 1), rebuilt);
    if (l + 1 < w.length()) rebuilt = concat(rebuilt, subword(w, l + 1, w.length() - 1));
    if (!(rebuilt == w)) return fail("decomposition identity on " + w.str());
    return ok();
  });

  r.run(s, "monoid_fold", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word w = random_word(rng, alpha);
    MonoidSpec<std::uint64_t> add{0, [](const std::uint64_t& a, const std::uint64_t& b) {
                                   return a + b;
                                 }};
    std::uint64_t len = lift_to_monoid<std::uint64_t>(
        add, [](std::size_t) { return std::uint64_t{1}; }, w);
    if (len != w.length()) return fail("constant-one fold is not the length");
    std::size_t x = rng.below(alpha->size());
    std::uint64_t cnt = lift_to_monoid<std::uint64_t>(
        add, [x](std::size_t e) { return std::uint64_t{e == x ? 1u : 0u}; }, w);
    if (cnt != count(w, x)) return fail("delta fold is not the count");
    return ok();
  });

  r.run(s, "map_word_properties", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    Word w = random_word(rng, a);
    Word fw = map_word(f, w);
    if (fw.length() != w.length()) return fail("length not preserved");
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (fw[i] != f(w[i])) return fail("entrywise action violated");
    }
    for (std::size_t y = 0; y < b->size(); ++y) {
      std::size_t fiber_sum = 0;
      for (std::size_t x = 0; x < a->size(); ++x) {
        if (f(x) == y) fiber_sum += count(w, x);
      }
      if (count(fw, y) != fiber_sum) {
        return fail("fiber-sum count identity at " + b->letter(y));
      }
    }
    return ok();
  });

  r.run(s, "equiv_is_congruence", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word u = random_word(rng, alpha), v = random_word(rng, alpha);
    Word u2 = shuffled(rng, u), v2 = shuffled(rng, v);
    if (!equiv(u, u2) || !equiv(v, v2)) return fail("shuffle not equivalent");
    if (!equiv(concat(u, v), concat(u2, v2))) {
      return fail("concat does not respect equivalence");
    }
    LetterMap f = random_letter_map(rng, alpha, random_alphabet(rng));
    if (!equiv(map_word(f, u), map_word(f, u2))) {
      return fail("map_word does not respect equivalence");
    }
    return ok();
  });

  r.run(s, "parikh_round_trip", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word u = random_word(rng, alpha), v = random_word(rng, alpha);
    if (!(parikh(concat(u, v)) == parikh(u) + parikh(v))) {
      return fail("parikh not additive");
    }
    if (!equiv(u, parikh_to_canonical_word(parikh(u)))) {
      return fail("canonical word not equivalent to " + u.str());
    }
    if ((parikh(u) == parikh(v)) != equiv(u, v)) {
      return fail("parikh equality disagrees with equiv");
    }
    return ok();
  });

  r.run(s, "occ_pos_round_trips", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word w = random_word(rng, alpha);
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (pos(w, w[i], occ(w, i)) != i) return fail("pos after occ at " + std::to_string(i));
    }
    for (std::size_t x = 0; x < alpha->size(); ++x) {
      for (std::size_t j = 0; j < count(w, x); ++j) {
        if (occ(w, pos(w, x, j)) != j) return fail("occ after pos");
      }
    }
    return ok();
  });

  r.run(s, "sigma_laws", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word a = random_word(rng, alpha);
    Word b = shuffled(rng, a), c = shuffled(rng, a);
    Permutation sab = canonical_perm(a, b);
    Permutation sbc = canonical_perm(b, c);
    Permutation sac = canonical_perm(a, c);
    if (!canonical_perm(a, a).is_identity()) return fail("sigma(a,a) != id");
    if (!(compose(sbc, sab) == sac)) return fail("sigma composition law");
    if (!(invert(sab) == canonical_perm(b, a))) return fail("sigma inverse law");
    for (std::size_t i = 0; i < a.length(); ++i) {
      if (occ(a, i) != occ(b, sab(i))) return fail("occ transport");
    }
    Permutation sba = canonical_perm(b, a);
    for (std::size_t x = 0; x < alpha->size(); ++x) {
      for (std::size_t j = 0; j < count(a, x); ++j) {
        if (pos(a, x, j) != sba(pos(b, x, j))) return fail("pos transport");
      }
    }
    return ok();
  });

  r.run(s, "right_action_laws", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    Word w = random_word(rng, alpha);
    Permutation st = random_permutation(rng, w.length());
    Permutation tt = random_permutation(rng, w.length());
    if (!(apply_right_action(w, Permutation::identity(w.length())) == w)) {
      return fail("action unit law");
    }
    Word lhs = apply_right_action(w, compose(st, tt));
    Word rhs = apply_right_action(apply_right_action(w, st), tt);
    if (!(lhs == rhs)) return fail("action composition law");
    Word b = shuffled(rng, w);
    if (!(apply_right_action(b, canonical_perm(w, b)) == w)) {
      return fail("sigma does not witness the equivalence");
    }
    return ok();
  });

  r.run(s, "category_laws_small_homs", [](Rng& rng) {
    AlphabetPtr alpha = make_alphabet(std::string("ab"));
    Word a = random_word(rng, alpha, 3), b = random_word(rng, alpha, 3),
         c = random_word(rng, alpha, 3);
    auto hom_ab = enumerate_hom(a, b);
    auto hom_bc = enumerate_hom(b, c);
    if (hom_ab.size() != hom_cardinality(a, b)) {
      return fail("enumeration count disagrees with the formula");
    }
    for (const auto& phi : hom_ab) {
      if (!(compose(identity(b), phi) == phi) || !(compose(phi, identity(a)) == phi)) {
        return fail("unit law in hom(" + a.str() + "," + b.str() + ")");
      }
      if (is_iso(phi) && !equiv(phi.dom(), phi.cod())) {
        return fail("iso between non-equivalent words");
      }
      for (const auto& psi : hom_bc) {
        CMorphism gf = compose(psi, phi);
        if (!(gf.dom() == a) || !(gf.cod() == c)) return fail("compose endpoints");
      }
    }
    return ok();
  });

  r.run(s, "functor_c_laws", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    AlphabetPtr c = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    LetterMap g = random_letter_map(rng, b, c);
    CMorphism phi = random_cmorphism(rng, a);
    LetterMap ida = LetterMap::identity(a);
    if (!(functor_c_mor(ida, phi) == phi)) return fail("C(id) != id");
    CMorphism two_step = functor_c_mor(g, functor_c_mor(f, phi));
    CMorphism one_step = functor_c_mor(compose(g, f), phi);
    if (!(two_step == one_step)) return fail("C(g o f) != C(g) o C(f)");
    return ok();
  });

  r.run(s, "q_normal_form", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    QMorphism qm = q_morphism(phi);
    if (!matrix_related(phi, qm.rep())) return fail("rep not related to source");
    // transported copy of phi along random shuffles stays in the same class
    Word a2 = shuffled(rng, phi.dom()), b2 = shuffled(rng, phi.cod());
    Permutation sa = canonical_perm(a2, phi.dom());
    Permutation sb = canonical_perm(phi.cod(), b2);
    std::vector<std::size_t> map(a2.length());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = sb(phi(sa(i)));
    CMorphism psi(a2, b2, map);
    if (!matrix_related(phi, psi)) return fail("transport not related");
    if (!(q_morphism(psi) == qm)) return fail("related morphisms differ in class rep");
    if (!(q_morphism(phi.dom() == phi.cod() ? identity(phi.dom()) : phi).rep().dom() ==
          q_object(phi.dom()).canonical())) {
      return fail("rep not between canonical words");
    }
    return ok();
  });

  r.run(s, "q_category_laws", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    // a composable partner psi : cod(phi) -> c
    Word b = phi.cod();
    std::vector<std::vector<std::size_t>> fibers(alpha->size());
    Word c = shuffled(rng, b);
    for (std::size_t j = 0; j < c.length(); ++j) fibers[c[j]].push_back(j);
    std::vector<std::size_t> map(b.length());
    for (std::size_t i = 0; i < b.length(); ++i) {
      const auto& fiber = fibers[b[i]];
      map[i] = fiber[rng.below(fiber.size())];
    }
    CMorphism psi(b, c, std::move(map));
    QMorphism qphi = q_morphism(phi), qpsi = q_morphism(psi);
    if (!(q_compose(qpsi, qphi) == q_morphism(compose(psi, phi)))) {
      return fail("class composition disagrees with composing then projecting");
    }
    if (!(q_compose(qphi, q_identity(qphi.dom())) == qphi) ||
        !(q_compose(q_identity(qphi.cod()), qphi) == qphi)) {
      return fail("quotient unit laws");
    }
    return ok();
  });

  r.run(s, "fiber_map_laws", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    const Word& a = phi.dom();
    const Word& b = phi.cod();
    for (std::size_t x = 0; x < alpha->size(); ++x) {
      std::vector<std::size_t> fm = fiber_map(phi, x);
      for (std::size_t j = 0; j < fm.size(); ++j) {
        if (phi(pos(a, x, j)) != pos(b, x, fm[j])) {
          return fail("fiber square does not commute");
        }
      }
    }
    std::vector<std::size_t> idm = fiber_map(identity(a), rng.below(alpha->size()));
    for (std::size_t j = 0; j < idm.size(); ++j) {
      if (idm[j] != j) return fail("identity fiber map is not the identity");
    }
    return ok();
  });
}

void add_equivalence_suite(Runner& r) {
  const std::string s = "equivalence";

  r.run(s, "vs_functor_laws", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    if (!(vs_mor(identity(phi.dom())) == SortedMapping::identity(vs_obj(phi.dom())))) {
      return fail("vs does not preserve identities");
    }
    Word c = shuffled(rng, phi.cod());
    CMorphism psi(phi.cod(), c, canonical_perm(phi.cod(), c).map());
    if (!(vs_mor(compose(psi, phi)) == compose(vs_mor(psi), vs_mor(phi)))) {
      return fail("vs does not preserve compositions");
    }
    return ok();
  });

  r.run(s, "vs_fullness_faithfulness", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    if (!(vs_full_inverse(phi.dom(), phi.cod(), vs_mor(phi)) == phi)) {
      return fail("full inverse does not recover the morphism");
    }
    return ok();
  });

  r.run(s, "vs_hom_count_bridge", [](Rng& rng) {
    AlphabetPtr alpha = make_alphabet(std::string("ab"));
    Word a = random_word(rng, alpha, 3), b = random_word(rng, alpha, 3);
    std::uint64_t expected = 1;
    SortedSet va = vs_obj(a), vb = vs_obj(b);
    for (std::size_t x = 0; x < alpha->size(); ++x) {
      std::uint64_t base = vb.part(x).size(), exp = va.part(x).size();
      for (std::uint64_t e = 0; e < exp; ++e) expected *= base;
    }
    if (expected != hom_cardinality(a, b)) {
      return fail("sorted-mapping count disagrees with hom cardinality");
    }
    auto hom = enumerate_hom(a, b);
    // faithfulness: distinct morphisms have distinct images
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = i + 1; j < hom.size(); ++j) {
        if (vs_mor(hom[i]) == vs_mor(hom[j])) return fail("vs not injective");
      }
    }
    return ok();
  });

  r.run(s, "vs_essential_surjectivity", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    SortedSet x = random_sorted_set(rng, alpha);
    SortedMapping witness = sorted_set_to_word_witness(x);
    if (!witness.is_bijective()) return fail("witness is not an iso");
    if (!(witness.cod() == vs_obj(sorted_set_to_word(x)))) {
      return fail("witness not typed into the position set");
    }
    return ok();
  });

  r.run(s, "coproduct_functor_laws", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    SortedSet x = random_sorted_set(rng, a);
    SortedMapping h = random_sorted_mapping(rng, x);
    SortedMapping k = random_sorted_mapping(rng, h.cod());
    if (!(coproduct_mor(f, SortedMapping::identity(x)) ==
          SortedMapping::identity(coproduct_obj(f, x)))) {
      return fail("reindexing does not preserve identities");
    }
    if (!(coproduct_mor(f, compose(k, h)) ==
          compose(coproduct_mor(f, k), coproduct_mor(f, h)))) {
      return fail("reindexing does not preserve compositions");
    }
    return ok();
  });

  r.run(s, "q_functor_laws", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    QMorphism qphi = q_morphism(phi);
    if (!(q_to_msets_mor(q_identity(qphi.dom())) ==
          SortedMapping::identity(q_to_msets_obj(qphi.dom())))) {
      return fail("rank functor does not preserve identities");
    }
    Word c = shuffled(rng, phi.cod());
    CMorphism psi(phi.cod(), c, canonical_perm(phi.cod(), c).map());
    QMorphism qpsi = q_morphism(psi);
    if (!(q_to_msets_mor(q_compose(qpsi, qphi)) ==
          compose(q_to_msets_mor(qpsi), q_to_msets_mor(qphi)))) {
      return fail("rank functor does not preserve compositions");
    }
    return ok();
  });

  r.run(s, "q_fullness_round_trip", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    QMorphism qm = q_morphism(phi);
    SortedMapping h = q_to_msets_mor(qm);
    QMorphism rebuilt = q_full_inverse(qm.dom(), qm.cod(), h);
    if (!(rebuilt == qm)) return fail("full inverse does not recover the class");
    if (!(q_to_msets_mor(rebuilt) == h)) return fail("round trip on mappings");
    return ok();
  });

  r.run(s, "q_invariance_on_classes", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    CMorphism phi = random_cmorphism(rng, alpha);
    // transport phi to shuffled endpoints; fiber maps must be unchanged
    Word a2 = shuffled(rng, phi.dom()), b2 = shuffled(rng, phi.cod());
    Permutation sa = canonical_perm(a2, phi.dom());
    Permutation sb = canonical_perm(phi.cod(), b2);
    std::vector<std::size_t> map(a2.length());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = sb(phi(sa(i)));
    CMorphism psi(a2, b2, std::move(map));
    for (std::size_t x = 0; x < alpha->size(); ++x) {
      if (fiber_map(phi, x) != fiber_map(psi, x)) {
        return fail("related morphisms have different fiber maps");
      }
    }
    return ok();
  });
}

void add_naturality_suite(Runner& r) {
  const std::string s = "naturality";

  r.run(s, "pr_square", [](Rng& rng) {
    AlphabetPtr alpha = random_alphabet(rng);
    SortedSet x = random_sorted_set(rng, alpha);
    SortedMapping h = random_sorted_mapping(rng, x);
    LetterMap id = LetterMap::identity(alpha);
    SortedMapping lhs = compose(h, pr_iso(x));
    SortedMapping rhs = compose(pr_iso(h.cod()), coproduct_mor(id, h));
    if (!(lhs == rhs)) return fail("pr naturality square");
    if (!pr_iso(x).is_bijective()) return fail("pr is not bijective");
    return ok();
  });

  r.run(s, "alpha_square", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    AlphabetPtr c = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    LetterMap g = random_letter_map(rng, b, c);
    SortedSet x = random_sorted_set(rng, a);
    SortedMapping h = random_sorted_mapping(rng, x);
    SortedMapping lhs = compose(coproduct_mor(g, coproduct_mor(f, h)), alpha_iso(f, g, x));
    SortedMapping rhs = compose(alpha_iso(f, g, h.cod()), coproduct_mor(compose(g, f), h));
    if (!(lhs == rhs)) return fail("alpha naturality square");
    if (!alpha_iso(f, g, x).is_bijective()) return fail("alpha is not bijective");
    return ok();
  });

  r.run(s, "beta_square", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    CMorphism phi = random_cmorphism(rng, a);
    SortedMapping lhs = compose(vs_mor(functor_c_mor(f, phi)), beta_iso(f, phi.dom()));
    SortedMapping rhs = compose(beta_iso(f, phi.cod()), coproduct_mor(f, vs_mor(phi)));
    if (!(lhs == rhs)) return fail("beta naturality square");
    if (!beta_iso(f, phi.dom()).is_bijective()) return fail("beta is not bijective");
    return ok();
  });

  r.run(s, "pi_square", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    CMorphism phi = random_cmorphism(rng, a);
    if (!(functor_q_mor(f, q_morphism(phi)) == q_morphism(functor_c_mor(f, phi)))) {
      return fail("projection naturality square");
    }
    return ok();
  });

  r.run(s, "gamma_square", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    CMorphism phi = random_cmorphism(rng, a);
    QMorphism qm = q_morphism(phi);
    SortedMapping lhs = compose(q_to_msets_mor(functor_q_mor(f, qm)), gamma_iso(f, qm.dom()));
    SortedMapping rhs = compose(gamma_iso(f, qm.cod()), coproduct_mor(f, q_to_msets_mor(qm)));
    if (!(lhs == rhs)) return fail("gamma naturality square");
    if (!gamma_iso(f, qm.dom()).is_bijective()) return fail("gamma is not bijective");
    return ok();
  });

  r.run(s, "q_functoriality_on_letter_maps", [](Rng& rng) {
    AlphabetPtr a = random_alphabet(rng);
    AlphabetPtr b = random_alphabet(rng);
    AlphabetPtr c = random_alphabet(rng);
    LetterMap f = random_letter_map(rng, a, b);
    LetterMap g = random_letter_map(rng, b, c);
    CMorphism phi = random_cmorphism(rng, a);
    QMorphism qm = q_morphism(phi);
    if (!(functor_q_mor(LetterMap::identity(a), qm) == qm)) {
      return fail("Q(id) != id");
    }
    if (!(functor_q_mor(g, functor_q_mor(f, qm)) == functor_q_mor(compose(g, f), qm))) {
      return fail("Q(g o f) != Q(g) o Q(f)");
    }
    return ok();
  });
}

}  // namespace

Summary run_suite(const std::string& suite, const Options& options) {
  Runner runner{options, {}, {}};
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "laws") {
    add_laws_suite(runner);
    known = true;
  }
  if (all || suite == "equivalence") {
    add_equivalence_suite(runner);
    known = true;
  }
  if (all || suite == "naturality") {
    add_naturality_suite(runner);
    known = true;
  }
  if (!known) {
    throw MalformedInput("unknown suite: " + suite +
                         " (expected laws|equivalence|naturality|all)");
  }
  runner.out << "summary suite=" << suite << " seed=" << options.seed
             << " trials=" << options.trials << " checks=" << runner.summary.checks
             << " failures=" << runner.summary.failures << " "
             << (runner.summary.pass ? "PASS" : "FAIL") << "\n";
  runner.summary.output = runner.out.str();
  return runner.summary;
}

}  // namespace monoidcats::verify
