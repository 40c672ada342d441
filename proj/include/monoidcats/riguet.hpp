#ifndef MONOIDCATS_RIGUET_HPP_
#define MONOIDCATS_RIGUET_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monoidcats/errors.hpp"

namespace monoidcats {

// An explicitly tabulated finite category: objects, morphisms with
// endpoints, identities, and a composition table. Declaration order of
// objects and morphisms is stable and drives all deterministic reporting.
class FiniteCategory {
 public:
  void add_object(const std::string& id);
  void add_morphism(const std::string& id, const std::string& dom,
                    const std::string& cod);
  void set_identity(const std::string& obj, const std::string& mor);
  void set_compose(const std::string& g, const std::string& f,
                   const std::string& gf);

  // Checks unit and associativity laws over the tables, that identities are
  // present for every object, and that compose is defined exactly for
  // composable pairs. Throws MalformedCategory on any violation.
  void validate() const;

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& morphisms() const noexcept { return morphisms_; }
  bool has_object(const std::string& id) const;
  bool has_morphism(const std::string& id) const;
  std::size_t object_index(const std::string& id) const;
  std::size_t morphism_index(const std::string& id) const;

  const std::string& dom(const std::string& mor) const;
  const std::string& cod(const std::string& mor) const;
  const std::string& identity_of(const std::string& obj) const;

  // Morphisms from a to b, in declaration order.
  const std::vector<std::string>& hom(const std::string& a,
                                      const std::string& b) const;

  std::string compose(const std::string& g, const std::string& f) const;

 private:
  std::vector<std::string> objects_;
  std::map<std::string, std::size_t> obj_index_;
  std::vector<std::string> morphisms_;
  std::map<std::string, std::size_t> mor_index_;
  std::map<std::string, std::pair<std::string, std::string>> endpoints_;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> homs_;
  std::map<std::pair<std::string, std::string>, std::string> compose_;
  std::map<std::string, std::string> identities_;

  static const std::vector<std::string> kEmptyHom;
};

// An object-pair matrix (a b / a' b') keying a morphism relation.
struct Matrix {
  std::string a, b, a2, b2;
  auto operator<=>(const Matrix&) const = default;
};

// Object partition plus per-matrix morphism relations; the data of a Riguet
// congruence, prior to axiom verification.
class RiguetCongruence {
 public:
  RiguetCongruence(const FiniteCategory& cat,
                   std::vector<std::vector<std::string>> obj_blocks,
                   std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl);

  // The diagonal congruence: identity partition, diagonal relations.
  static RiguetCongruence diagonal(const FiniteCategory& cat);

  bool obj_related(const std::string& x, const std::string& y) const;
  const std::vector<std::vector<std::string>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t block_of(const std::string& obj) const;

  // The relation for a matrix; empty if no pairs are stored.
  const std::set<std::pair<std::string, std::string>>& pairs(const Matrix& m) const;
  bool related(const Matrix& m, const std::string& f, const std::string& f2) const;

  const std::map<Matrix, std::set<std::pair<std::string, std::string>>>& fl()
      const noexcept {
    return fl_;
  }

  RiguetCongruence with_pair_removed(const Matrix& m,
                                     const std::pair<std::string, std::string>& p) const;
  RiguetCongruence with_pair_added(const Matrix& m,
                                   const std::pair<std::string, std::string>& p) const;

 private:
  std::vector<std::vector<std::string>> blocks_;
  std::map<std::string, std::size_t> block_of_;
  std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl_;

  static const std::set<std::pair<std::string, std::string>> kEmptyPairs;
};

// Per-condition verdicts. A failing condition carries the lexicographically
// first counterexample under declaration order.
struct AxiomReport {
  struct Condition {
    int number = 0;
    bool pass = true;
    std::vector<std::string> witness;  // empty when passing
    std::string detail;
  };
  std::vector<Condition> conditions;

  bool all_pass() const {
    for (const auto& c : conditions) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// Checks the five defining conditions: diagonal containment, inverse
// symmetry, relational-composition closure, horizontal compatibility of
// composition, and lifting existence.
AxiomReport check_riguet_axioms(const FiniteCategory& cat,
                                const RiguetCongruence& phi);

// Members of the class of `f`: all morphisms related to f across every
// matrix with endpoints equivalent to f's.
std::set<std::string> morph_class(const FiniteCategory& cat,
                                  const RiguetCongruence& phi,
                                  const std::string& f);

struct QuotientCategory {
  FiniteCategory cat;
  std::map<std::string, std::string> object_map;    // object -> block id
  std::map<std::string, std::string> morphism_map;  // morphism -> class id
};

// Builds the quotient category; requires the axioms to pass and re-validates
// the category laws of the result.
QuotientCategory quotient(const FiniteCategory& cat, const RiguetCongruence& phi);

// Embeds an equivalence on parallel morphisms (given as blocks of morphism
// ids) as a Riguet congruence with the identity object partition. Checks
// that the relation respects composition.
RiguetCongruence from_strong_congruence(
    const FiniteCategory& cat,
    const std::vector<std::vector<std::string>>& morphism_blocks);

// Blockwise meet of the object partitions and pairwise intersection of the
// morphism relations.
RiguetCongruence intersect(const FiniteCategory& cat,
                           const RiguetCongruence& phi1,
                           const RiguetCongruence& phi2);

}  // namespace monoidcats

#endif  // MONOIDCATS_RIGUET_HPP_
