#include "monoidcats/quotient_q.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "monoidcats/perm.hpp"

namespace monoidcats {

QObject::QObject(Word canonical) : canonical_(std::move(canonical)) {
  Word sorted = parikh_to_canonical_word(parikh(canonical_));
  if (!(sorted == canonical_)) {
    throw MalformedInput("word " + canonical_.str() +
                         " is not in canonical (sorted) form");
  }
}

QMorphism::QMorphism(CMorphism rep)
    : dom_(rep.dom()), cod_(rep.cod()), rep_(std::move(rep)) {}

bool matrix_related(const CMorphism& phi, const CMorphism& phi2) {
  if (!equiv(phi.dom(), phi2.dom()) || !equiv(phi.cod(), phi2.cod())) {
    throw NotEquivalentEndpoints(
        "morphisms do not have letter-count equivalent endpoints");
  }
  Permutation sigma_dom = canonical_perm(phi.dom(), phi2.dom());
  Permutation sigma_cod = canonical_perm(phi.cod(), phi2.cod());
  for (std::size_t i = 0; i < phi.dom().length(); ++i) {
    if (phi2(sigma_dom(i)) != sigma_cod(phi(i))) return false;
  }
  return true;
}

QObject q_object(const Word& a) {
  return QObject(parikh_to_canonical_word(parikh(a)));
}

QMorphism q_morphism(const CMorphism& phi) {
  const Word& a = phi.dom();
  const Word& b = phi.cod();
  Word ac = parikh_to_canonical_word(parikh(a));
  Word bc = parikh_to_canonical_word(parikh(b));
  Permutation to_a = canonical_perm(ac, a);    // ac = a o to_a
  Permutation to_bc = canonical_perm(b, bc);   // b = bc o to_bc
  std::vector<std::size_t> map(ac.length());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = to_bc(phi(to_a(i)));
  }
  return QMorphism(CMorphism(std::move(ac), std::move(bc), std::move(map)));
}

QMorphism q_identity(const QObject& o) {
  return QMorphism(identity(o.canonical()));
}

QMorphism q_compose(const QMorphism& psi, const QMorphism& phi) {
  if (!(phi.cod() == psi.dom())) {
    throw NotComposable("quotient morphisms are not composable");
  }
  return QMorphism(compose(psi.rep(), phi.rep()));
}

QObject functor_q_obj(const LetterMap& f, const QObject& o) {
  return q_object(map_word(f, o.canonical()));
}

QMorphism functor_q_mor(const LetterMap& f, const QMorphism& m) {
  return q_morphism(functor_c_mor(f, m.rep()));
}

std::vector<std::size_t> fiber_map(const CMorphism& phi, std::size_t letter_index) {
  if (letter_index >= phi.dom().alphabet().size()) {
    throw UnknownLetter("letter index " + std::to_string(letter_index));
  }
  std::size_t n = count(phi.dom(), letter_index);
  std::vector<std::size_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = occ(phi.cod(), phi(pos(phi.dom(), letter_index, j)));
  }
  return out;
}

std::vector<std::size_t> fiber_map(const CMorphism& phi, const std::string& letter) {
  return fiber_map(phi, phi.dom().alphabet().index_of(letter));
}

SortedSet q_to_msets_obj(const QObject& o) {
  SortedSet result(o.canonical().alphabet_ptr());
  for (std::size_t x = 0; x < o.canonical().alphabet().size(); ++x) {
    std::size_t n = count(o.canonical(), x);
    for (std::size_t j = 0; j < n; ++j) result.add(x, Element::atom(j));
  }
  return result;
}

SortedMapping q_to_msets_mor(const QMorphism& m) {
  SortedSet dom = q_to_msets_obj(m.dom());
  SortedSet cod = q_to_msets_obj(m.cod());
  std::vector<std::map<Element, Element>> comps(dom.alphabet().size());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    std::vector<std::size_t> fm = fiber_map(m.rep(), x);
    for (std::size_t j = 0; j < fm.size(); ++j) {
      comps[x].emplace(Element::atom(j), Element::atom(fm[j]));
    }
  }
  return SortedMapping(std::move(dom), std::move(cod), std::move(comps));
}

QMorphism q_full_inverse(const QObject& o1, const QObject& o2,
                         const SortedMapping& h) {
  if (!(h.dom() == q_to_msets_obj(o1)) || !(h.cod() == q_to_msets_obj(o2))) {
    throw SortMismatch("mapping is not typed between the rank sets of the classes");
  }
  const Word& a = o1.canonical();
  const Word& b = o2.canonical();
  std::vector<std::size_t> map(a.length());
  for (std::size_t i = 0; i < a.length(); ++i) {
    std::uint64_t j = h.apply(a[i], Element::atom(occ(a, i))).atom_value();
    map[i] = pos(b, a[i], static_cast<std::size_t>(j));
  }
  return QMorphism(CMorphism(a, b, std::move(map)));
}

SortedMapping gamma_iso(const LetterMap& f, const QObject& o) {
  const Word& a = o.canonical();
  Word fa = map_word(f, a);
  SortedSet dom = coproduct_obj(f, q_to_msets_obj(o));
  SortedSet cod = q_to_msets_obj(functor_q_obj(f, o));
  std::vector<std::map<Element, Element>> comps(f.cod()->size());
  for (std::size_t b = 0; b < comps.size(); ++b) {
    for (const auto& e : dom.part(b)) {
      if (e.is_atom() || !e.inner().is_atom()) {
        throw MalformedElement("expected a tagged atom, got " + e.str());
      }
      std::size_t x = a.alphabet().index_of(e.tag());
      std::size_t j = static_cast<std::size_t>(e.inner().atom_value());
      comps[b].emplace(e, Element::atom(occ(fa, pos(a, x, j))));
    }
  }
  return SortedMapping(std::move(dom), std::move(cod), std::move(comps));
}

std::vector<Word> words_up_to(const AlphabetPtr& alphabet, std::size_t max_len) {
  std::vector<Word> result;
  result.push_back(Word::empty(alphabet));
  std::vector<std::size_t> entries;
  for (std::size_t len = 1; len <= max_len; ++len) {
    entries.assign(len, 0);
    while (true) {
      result.emplace_back(alphabet, entries);
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++entries[i] < alphabet->size()) break;
        entries[i] = 0;
        if (i == 0) goto next_length;
      }
    }
  next_length:;
  }
  return result;
}

std::pair<FiniteCategory, RiguetCongruence> export_truncation(
    const AlphabetPtr& alphabet, std::size_t max_len, std::uint64_t cap) {
  std::vector<Word> words = words_up_to(alphabet, max_len);
  FiniteCategory cat;
  for (const auto& w : words) cat.add_object(w.str());

  // morphisms, in lexicographic enumeration order per hom
  std::map<std::string, CMorphism> by_id;
  std::map<std::tuple<std::string, std::string, std::vector<std::size_t>>,
           std::string>
      id_of;
  for (const auto& a : words) {
    for (const auto& b : words) {
      std::vector<CMorphism> hom = enumerate_hom(a, b, cap);
      for (std::size_t k = 0; k < hom.size(); ++k) {
        std::string id = a.str() + "->" + b.str() + "#" + std::to_string(k);
        cat.add_morphism(id, a.str(), b.str());
        id_of[{a.str(), b.str(), hom[k].map()}] = id;
        by_id.emplace(id, std::move(hom[k]));
      }
    }
  }
  for (const auto& a : words) {
    CMorphism ida = identity(a);
    cat.set_identity(a.str(), id_of.at({a.str(), a.str(), ida.map()}));
  }
  for (const auto& [fid, f] : by_id) {
    for (const auto& [gid, g] : by_id) {
      if (!(f.cod() == g.dom())) continue;
      CMorphism gf = compose(g, f);
      cat.set_compose(gid, fid,
                      id_of.at({gf.dom().str(), gf.cod().str(), gf.map()}));
    }
  }

  // object blocks by letter counts
  std::map<std::vector<std::uint64_t>, std::vector<std::string>> by_counts;
  for (const auto& w : words) by_counts[parikh(w).counts()].push_back(w.str());
  std::vector<std::vector<std::string>> blocks;
  for (auto& [counts, block] : by_counts) blocks.push_back(std::move(block));

  // morphism relations via canonical-permutation conjugation
  std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl;
  for (const auto& a : words) {
    for (const auto& b : words) {
      for (const auto& a2 : words) {
        if (!equiv(a, a2)) continue;
        for (const auto& b2 : words) {
          if (!equiv(b, b2)) continue;
          Matrix m{a.str(), b.str(), a2.str(), b2.str()};
          std::set<std::pair<std::string, std::string>> pairs;
          for (const auto& f : cat.hom(m.a, m.b)) {
            for (const auto& f2 : cat.hom(m.a2, m.b2)) {
              if (matrix_related(by_id.at(f), by_id.at(f2))) {
                pairs.insert({f, f2});
              }
            }
          }
          if (!pairs.empty()) fl[m] = std::move(pairs);
        }
      }
    }
  }

  RiguetCongruence phi(cat, std::move(blocks), std::move(fl));
  return {std::move(cat), std::move(phi)};
}

bool skeletal_check(const FiniteCategory& cat) {
  for (const auto& f : cat.morphisms()) {
    const std::string& a = cat.dom(f);
    const std::string& b = cat.cod(f);
    if (a == b) continue;
    for (const auto& g : cat.hom(b, a)) {
      if (cat.compose(g, f) == cat.identity_of(a) &&
          cat.compose(f, g) == cat.identity_of(b)) {
        return false;  // iso between distinct objects
      }
    }
  }
  return true;
}

}  // namespace monoidcats
