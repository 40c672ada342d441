#ifndef MONOIDCATS_QUOTIENT_Q_HPP_
#define MONOIDCATS_QUOTIENT_Q_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "monoidcats/cat_c.hpp"
#include "monoidcats/msets.hpp"
#include "monoidcats/riguet.hpp"
#include "monoidcats/words.hpp"

namespace monoidcats {

// A letter-count class of words, represented by its canonical member: the
// word sorted into alphabet declaration order.
class QObject {
 public:
  explicit QObject(Word canonical);

  const Word& canonical() const noexcept { return canonical_; }

  bool operator==(const QObject& other) const {
    return canonical_ == other.canonical_;
  }

 private:
  Word canonical_;
};

// A class of parallel-up-to-equivalence morphisms, represented by the
// transported morphism between canonical words. Class equality is structural
// equality of representatives.
class QMorphism {
 public:
  explicit QMorphism(CMorphism rep);

  const QObject& dom() const { return dom_; }
  const QObject& cod() const { return cod_; }
  const CMorphism& rep() const noexcept { return rep_; }

  bool operator==(const QMorphism& other) const { return rep_ == other.rep_; }

 private:
  QObject dom_;
  QObject cod_;
  CMorphism rep_;
};

// Whether two morphisms with equivalent endpoints are conjugate under the
// canonical permutations: phi2 o sigma_{a,a'} = sigma_{b,b'} o phi.
bool matrix_related(const CMorphism& phi, const CMorphism& phi2);

QObject q_object(const Word& a);
QMorphism q_morphism(const CMorphism& phi);

QMorphism q_identity(const QObject& o);
QMorphism q_compose(const QMorphism& psi, const QMorphism& phi);

QObject functor_q_obj(const LetterMap& f, const QObject& o);
QMorphism functor_q_mor(const LetterMap& f, const QMorphism& m);

// The occurrence-rank restriction of phi to one letter: j -> rank in cod of
// the image of the j-th occurrence in dom. Length equals count(dom, x).
std::vector<std::size_t> fiber_map(const CMorphism& phi, std::size_t letter_index);
std::vector<std::size_t> fiber_map(const CMorphism& phi, const std::string& letter);

// The equivalence with sorted sets: sort x carries atoms 0..count-1; a
// morphism carries its fiber maps.
SortedSet q_to_msets_obj(const QObject& o);
SortedMapping q_to_msets_mor(const QMorphism& m);

// Rebuilds the representative morphism from a family of fiber maps; the
// fullness direction.
QMorphism q_full_inverse(const QObject& o1, const QObject& o2,
                         const SortedMapping& h);

// Iso from the reindexed rank sets of o to the rank sets of the relabeled
// class: Tagged(Atom(j), x) -> Atom(rank of position of j-th x after
// relabeling).
SortedMapping gamma_iso(const LetterMap& f, const QObject& o);

// Explicit tables for all words of length <= max_len plus the letter-count
// congruence, ready for the generic axiom checker. Word labels use the
// compact rendering; the empty word is "_"; morphism k in the lexicographic
// enumeration of Hom(a,b) is labeled "a->b#k".
std::pair<FiniteCategory, RiguetCongruence> export_truncation(
    const AlphabetPtr& alphabet, std::size_t max_len,
    std::uint64_t cap = kDefaultEnumerationCap);

// All words of length <= max_len, by length then lexicographic entry order.
std::vector<Word> words_up_to(const AlphabetPtr& alphabet, std::size_t max_len);

// True iff every isomorphism in the fragment has equal endpoints. The
// fragment is given as explicit tables (either a truncation of the word
// category or of its quotient).
bool skeletal_check(const FiniteCategory& cat);

}  // namespace monoidcats

#endif  // MONOIDCATS_QUOTIENT_Q_HPP_
