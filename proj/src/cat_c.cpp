#include "monoidcats/cat_c.hpp"

#include <numeric>
#include <string>

namespace monoidcats {

CMorphism::CMorphism(Word dom, Word cod, std::vector<std::size_t> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!dom_.same_alphabet(cod_)) throw AlphabetMismatch();
  if (map_.size() != dom_.length()) {
    throw LengthMismatch("index map has length " + std::to_string(map_.size()) +
                         ", expected " + std::to_string(dom_.length()));
  }
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] >= cod_.length()) {
      throw IndexOutOfRange("map value " + std::to_string(map_[i]) +
                            " out of range for codomain of length " +
                            std::to_string(cod_.length()));
    }
    if (dom_[i] != cod_[map_[i]]) {
      throw NotAMorphism(
          i, "not a morphism: dom(" + std::to_string(i) + ") = " +
                 dom_.letter_at(i) + " but cod(" + std::to_string(map_[i]) +
                 ") = " + cod_.letter_at(map_[i]));
    }
  }
}

CMorphism check_morphism(const Word& a, const Word& b,
                         std::vector<std::size_t> map) {
  return CMorphism(a, b, std::move(map));
}

CMorphism identity(const Word& a) {
  std::vector<std::size_t> map(a.length());
  std::iota(map.begin(), map.end(), 0);
  return CMorphism(a, a, std::move(map));
}

CMorphism compose(const CMorphism& psi, const CMorphism& phi) {
  if (!(phi.cod() == psi.dom())) {
    throw NotComposable("codomain " + phi.cod().str() +
                        " does not equal domain " + psi.dom().str());
  }
  std::vector<std::size_t> map(phi.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = psi(phi(i));
  return CMorphism(phi.dom(), psi.cod(), std::move(map));
}

CMorphism from_permutation(const Word& u, const Word& v, const Permutation& s) {
  if (s.size() != u.length()) {
    throw SizeMismatch("permutation size does not match word length");
  }
  return CMorphism(u, v, s.map());
}

std::uint64_t hom_cardinality(const Word& a, const Word& b) {
  if (!a.same_alphabet(b)) throw AlphabetMismatch();
  std::uint64_t total = 1;
  for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
    std::uint64_t base = count(b, x);
    std::uint64_t exponent = count(a, x);
    for (std::uint64_t e = 0; e < exponent; ++e) {
      if (base != 0 && total > UINT64_MAX / base) {
        throw Overflow("hom cardinality exceeds 64 bits");
      }
      total *= base;
    }
  }
  return total;
}

HomEnumerator::HomEnumerator(Word a, Word b)
    : a_(std::move(a)), b_(std::move(b)), exhausted_(false), started_(false) {
  if (!a_.same_alphabet(b_)) throw AlphabetMismatch();
  // fiber(x) = positions of b carrying letter x, ascending
  std::vector<std::vector<std::size_t>> fibers(a_.alphabet().size());
  for (std::size_t j = 0; j < b_.length(); ++j) fibers[b_[j]].push_back(j);
  choices_.resize(a_.length());
  for (std::size_t i = 0; i < a_.length(); ++i) {
    choices_[i] = fibers[a_[i]];
    if (choices_[i].empty()) exhausted_ = true;
  }
  odometer_.assign(a_.length(), 0);
}

std::optional<CMorphism> HomEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (started_) {
    // advance odometer, rightmost position fastest
    std::size_t i = odometer_.size();
    while (i > 0) {
      --i;
      if (++odometer_[i] < choices_[i].size()) break;
      odometer_[i] = 0;
      if (i == 0) {
        exhausted_ = true;
        return std::nullopt;
      }
    }
    if (odometer_.empty()) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  std::vector<std::size_t> map(odometer_.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = choices_[i][odometer_[i]];
  }
  return CMorphism(a_, b_, std::move(map));
}

std::vector<CMorphism> enumerate_hom(const Word& a, const Word& b,
                                     std::uint64_t cap) {
  std::uint64_t total = hom_cardinality(a, b);
  if (total > cap) {
    throw CapExceeded("hom-set of size " + std::to_string(total) +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<CMorphism> result;
  result.reserve(static_cast<std::size_t>(total));
  HomEnumerator cursor(a, b);
  while (auto phi = cursor.next()) result.push_back(std::move(*phi));
  return result;
}

bool is_iso(const CMorphism& phi) {
  if (phi.dom().length() != phi.cod().length()) return false;
  std::vector<bool> hit(phi.cod().length(), false);
  for (std::size_t v : phi.map()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Word functor_c_obj(const LetterMap& f, const Word& a) { return map_word(f, a); }

CMorphism functor_c_mor(const LetterMap& f, const CMorphism& phi) {
  return CMorphism(map_word(f, phi.dom()), map_word(f, phi.cod()), phi.map());
}

}  // namespace monoidcats
