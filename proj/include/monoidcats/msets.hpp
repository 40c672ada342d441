#ifndef MONOIDCATS_MSETS_HPP_
#define MONOIDCATS_MSETS_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "monoidcats/cat_c.hpp"
#include "monoidcats/words.hpp"

namespace monoidcats {

// A coproduct element: either a bare Atom(n) or a Tagged(inner, letter),
// the "(x,a)" of a fiberwise disjoint union. Tagging nests, so reindexing
// twice is represented exactly, with no flattening.
class Element {
 public:
  static Element atom(std::uint64_t n);
  static Element tagged(Element inner, std::string tag);

  bool is_atom() const noexcept { return inner_ == nullptr; }
  std::uint64_t atom_value() const;       // throws MalformedElement on Tagged
  const Element& inner() const;           // throws MalformedElement on Atom
  const std::string& tag() const;         // throws MalformedElement on Atom

  std::string str() const;  // "3" or "(3,a)"

  std::strong_ordering operator<=>(const Element& other) const;
  bool operator==(const Element& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  Element(std::uint64_t value, std::shared_ptr<const Element> inner,
          std::string tag)
      : value_(value), inner_(std::move(inner)), tag_(std::move(tag)) {}

  std::uint64_t value_ = 0;
  std::shared_ptr<const Element> inner_;
  std::string tag_;
};

// A finite A-sorted set: one finite set of elements per letter.
class SortedSet {
 public:
  explicit SortedSet(AlphabetPtr alphabet);

  void add(std::size_t letter_index, Element e);
  void add(const std::string& letter, Element e);

  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::set<Element>& part(std::size_t letter_index) const;
  const std::set<Element>& part(const std::string& letter) const;
  bool contains(std::size_t letter_index, const Element& e) const;

  std::size_t card() const;
  std::vector<std::size_t> supp() const;  // letter indices with nonempty part

  bool operator==(const SortedSet& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::set<Element>> parts_;
};

// A componentwise mapping between sorted sets over the same alphabet. Each
// component must be total on the domain part and land in the codomain part.
class SortedMapping {
 public:
  SortedMapping(SortedSet dom, SortedSet cod,
                std::vector<std::map<Element, Element>> components);

  static SortedMapping identity(const SortedSet& x);

  const SortedSet& dom() const noexcept { return dom_; }
  const SortedSet& cod() const noexcept { return cod_; }
  const std::map<Element, Element>& component(std::size_t letter_index) const;
  Element apply(std::size_t letter_index, const Element& e) const;

  bool is_bijective() const;

  bool operator==(const SortedMapping& other) const;

 private:
  SortedSet dom_;
  SortedSet cod_;
  std::vector<std::map<Element, Element>> components_;
};

SortedMapping compose(const SortedMapping& k, const SortedMapping& h);

// Reindexing along f : A -> B. Part b of the result collects Tagged(x, a)
// for every a in the fiber of b and x in X_a.
SortedSet coproduct_obj(const LetterMap& f, const SortedSet& x);
SortedMapping coproduct_mor(const LetterMap& f, const SortedMapping& h);

// The tag-stripping iso from the identity reindexing of X back to X.
SortedMapping pr_iso(const SortedSet& x);

// The reassociating iso from reindexing along g o f to the two-step
// reindexing: (x,a) -> ((x,a), f(a)).
SortedMapping alpha_iso(const LetterMap& f, const LetterMap& g,
                        const SortedSet& x);

// The equivalence functor from words: sort x collects the positions of x as
// atoms; a morphism restricts to each fiber.
SortedSet vs_obj(const Word& a);
SortedMapping vs_mor(const CMorphism& phi);

// Reads an index map off a sorted mapping between position sets; the
// fullness direction of the equivalence.
CMorphism vs_full_inverse(const Word& a, const Word& b,
                          const SortedMapping& h);

// The block word with one run per letter, sized by the parts of X.
Word sorted_set_to_word(const SortedSet& x);

// Witness iso from X to vs_obj(sorted_set_to_word(X)): the k-th smallest
// element of each part pairs with the k-th position of that letter.
SortedMapping sorted_set_to_word_witness(const SortedSet& x);

// The iso from the reindexed position set of a to the position set of the
// relabeled word: Tagged(Atom(i), x) -> Atom(i).
SortedMapping beta_iso(const LetterMap& f, const Word& a);

}  // namespace monoidcats

#endif  // MONOIDCATS_MSETS_HPP_
