#ifndef MONOIDCATS_CAT_C_HPP_
#define MONOIDCATS_CAT_C_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "monoidcats/perm.hpp"
#include "monoidcats/words.hpp"

namespace monoidcats {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// A morphism a -> b in the category of words: an index map with
// a(i) = b(map(i)) for every i. The constructor validates this.
class CMorphism {
 public:
  CMorphism(Word dom, Word cod, std::vector<std::size_t> map);

  const Word& dom() const noexcept { return dom_; }
  const Word& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }
  std::size_t operator()(std::size_t i) const { return map_[i]; }

  bool operator==(const CMorphism& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && map_ == other.map_;
  }

 private:
  Word dom_;
  Word cod_;
  std::vector<std::size_t> map_;
};

// Validating constructor wrapper; rejects with the first violating index.
CMorphism check_morphism(const Word& a, const Word& b,
                         std::vector<std::size_t> map);

CMorphism identity(const Word& a);
CMorphism compose(const CMorphism& psi, const CMorphism& phi);

// A permutation witnessing u = v o s, viewed as a morphism u -> v.
CMorphism from_permutation(const Word& u, const Word& v, const Permutation& s);

// prod_x count(b,x)^count(a,x) with 0^0 = 1; throws Overflow past uint64.
std::uint64_t hom_cardinality(const Word& a, const Word& b);

// Single-consumer cursor over Hom(a,b) in lexicographic order of the index
// map sequence.
class HomEnumerator {
 public:
  HomEnumerator(Word a, Word b);
  std::optional<CMorphism> next();

 private:
  Word a_;
  Word b_;
  std::vector<std::vector<std::size_t>> choices_;  // fiber per position of a
  std::vector<std::size_t> odometer_;              // choice index per position
  bool exhausted_;
  bool started_;
};

// Materialized hom-set; refuses to start if the count exceeds `cap`.
std::vector<CMorphism> enumerate_hom(const Word& a, const Word& b,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// True iff the index map is a bijection; its inverse is then a morphism too.
bool is_iso(const CMorphism& phi);

// The functor induced by a letter map: entrywise relabeling of objects,
// identical index map on morphisms.
Word functor_c_obj(const LetterMap& f, const Word& a);
CMorphism functor_c_mor(const LetterMap& f, const CMorphism& phi);

}  // namespace monoidcats

#endif  // MONOIDCATS_CAT_C_HPP_
