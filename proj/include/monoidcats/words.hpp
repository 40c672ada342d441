#ifndef MONOIDCATS_WORDS_HPP_
#define MONOIDCATS_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "monoidcats/errors.hpp"

namespace monoidcats {

// A finite ordered set of distinct letter names. Declaration order is the
// canonical letter order used by every canonical-form construction.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letter(std::size_t i) const;
  const std::vector<std::string>& letters() const noexcept { return letters_; }

  bool contains(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws UnknownLetter

  // True when every letter name is a single character, enabling the compact
  // "abbba" word rendering.
  bool single_char() const noexcept { return single_char_; }

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_;
  }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, std::size_t> index_;
  bool single_char_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> letters);

// Alphabet from a string of single-character letters, e.g. "abc".
AlphabetPtr make_alphabet(const std::string& chars);

// A word is a map {0..n-1} -> A, stored as letter indices.
class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<std::size_t> entries);

  static Word empty(AlphabetPtr alphabet);
  static Word from_letters(AlphabetPtr alphabet,
                           const std::vector<std::string>& names);
  // Single-character convention: each char of `compact` is a letter name.
  static Word parse(AlphabetPtr alphabet, const std::string& compact);

  std::size_t length() const noexcept { return entries_.size(); }
  bool is_empty() const noexcept { return entries_.empty(); }

  std::size_t operator[](std::size_t i) const { return entries_[i]; }
  std::size_t at(std::size_t i) const;  // throws IndexOutOfRange
  const std::string& letter_at(std::size_t i) const;

  const std::vector<std::size_t>& entries() const noexcept { return entries_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  bool same_alphabet(const Word& other) const {
    return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
  }

  // Compact rendering when the alphabet is single-char, otherwise letter
  // names joined with '.'; the empty word renders as "_".
  std::string str() const;

  bool operator==(const Word& other) const {
    return same_alphabet(other) && entries_ == other.entries_;
  }
  bool operator<(const Word& other) const { return entries_ < other.entries_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<std::size_t> entries_;
};

// Letter-count fingerprint of a word; the free abelian monoid N^(A).
class ParikhVector {
 public:
  ParikhVector(AlphabetPtr alphabet, std::vector<std::uint64_t> counts);
  static ParikhVector zero(AlphabetPtr alphabet);

  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t count(std::size_t letter_index) const;
  std::uint64_t count(const std::string& letter) const;

  ParikhVector operator+(const ParikhVector& other) const;
  bool operator==(const ParikhVector& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::uint64_t> counts_;
};

// A mapping between alphabets, f : A -> B, stored as image indices.
class LetterMap {
 public:
  LetterMap(AlphabetPtr dom, AlphabetPtr cod, std::vector<std::size_t> images);
  static LetterMap from_names(AlphabetPtr dom, AlphabetPtr cod,
                              const std::map<std::string, std::string>& images);
  static LetterMap identity(AlphabetPtr alphabet);

  const AlphabetPtr& dom() const noexcept { return dom_; }
  const AlphabetPtr& cod() const noexcept { return cod_; }
  std::size_t operator()(std::size_t letter_index) const;
  std::size_t apply(std::size_t letter_index) const;

  bool is_identity() const;

 private:
  AlphabetPtr dom_;
  AlphabetPtr cod_;
  std::vector<std::size_t> images_;
};

// g after f; requires f.cod() == g.dom() as alphabets.
LetterMap compose(const LetterMap& g, const LetterMap& f);

Word concat(const Word& u, const Word& v);
std::size_t length(const Word& w);
std::size_t count(const Word& w, std::size_t letter_index);
std::size_t count(const Word& w, const std::string& letter);

// Entries at positions k..l inclusive; requires k <= l < length(w).
Word subword(const Word& w, std::size_t k, std::size_t l);

// Entrywise image under a letter map; the monoid homomorphism f^@ restricted
// to one word.
Word map_word(const LetterMap& f, const Word& w);

// Letter-count equivalence: same length and same count for every letter.
bool equiv(const Word& u, const Word& v);

ParikhVector parikh(const Word& w);

// The sorted block word a0^n0 a1^n1 ... in alphabet declaration order.
Word parikh_to_canonical_word(const ParikhVector& p);

// Identity + associative combine; associativity is the caller's obligation.
template <typename T>
struct MonoidSpec {
  T identity;
  std::function<T(const T&, const T&)> combine;
};

// The fold of the unique monoid homomorphism determined by letter_map,
// evaluated on one word: empty -> identity, u.x -> combine(fold(u), map(x)).
template <typename T>
T lift_to_monoid(const MonoidSpec<T>& m,
                 const std::function<T(std::size_t)>& letter_map,
                 const Word& w) {
  T acc = m.identity;
  for (std::size_t i = 0; i < w.length(); ++i) {
    acc = m.combine(acc, letter_map(w[i]));
  }
  return acc;
}

}  // namespace monoidcats

#endif  // MONOIDCATS_WORDS_HPP_
