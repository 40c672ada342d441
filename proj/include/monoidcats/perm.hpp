#ifndef MONOIDCATS_PERM_HPP_
#define MONOIDCATS_PERM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "monoidcats/words.hpp"

namespace monoidcats {

// A bijection of {0..n-1} in one-line notation: image(i) = map[i].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);

  // Parses space-separated cycles as in "(2 3 6 4)" or "(0 2 6)(1 3)";
  // fixed points may be omitted. `n` is the permutation size.
  static Permutation from_cycles(std::size_t n, const std::string& text);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  std::size_t apply(std::size_t i) const;
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  bool is_identity() const;

  // Cycle form, fixed points omitted; identity renders as "()".
  std::string cycles() const;
  // One-line form "[0,1,3,6,2,5,4,7,8]".
  std::string one_line() const;

  bool operator==(const Permutation& other) const { return map_ == other.map_; }

 private:
  std::vector<std::size_t> map_;
};

// (s o t)(i) = s(t(i)); sizes must match.
Permutation compose(const Permutation& s, const Permutation& t);
Permutation invert(const Permutation& s);

// Right action of the symmetric group: result(i) = w(s(i)).
Word apply_right_action(const Word& w, const Permutation& s);

// Rank (0-based) of position i among positions of w carrying the same letter.
std::size_t occ(const Word& w, std::size_t i);

// Position of the j-th occurrence of letter x in w.
std::size_t pos(const Word& w, std::size_t letter_index, std::size_t j);
std::size_t pos(const Word& w, const std::string& letter, std::size_t j);

// The canonical permutation s with u = v o s, sending each position of u to
// the same-rank occurrence of the same letter in v. Requires equiv(u, v);
// the postcondition u = v o s is re-checked before returning.
Permutation canonical_perm(const Word& u, const Word& v);

}  // namespace monoidcats

#endif  // MONOIDCATS_PERM_HPP_
