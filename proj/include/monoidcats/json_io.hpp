#ifndef MONOIDCATS_JSON_IO_HPP_
#define MONOIDCATS_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "monoidcats/msets.hpp"
#include "monoidcats/quotient_q.hpp"
#include "monoidcats/riguet.hpp"

namespace monoidcats {

using json = nlohmann::json;

json to_json(const Alphabet& a);
json to_json(const Word& w);
json to_json(const ParikhVector& p);
json to_json(const Permutation& s);
json to_json(const CMorphism& phi);
json to_json(const Element& e);
json to_json(const SortedSet& x);
json to_json(const SortedMapping& h);
json to_json(const FiniteCategory& cat);
json to_json(const RiguetCongruence& phi);
json to_json(const AxiomReport& report);
json to_json(const QObject& o, const Word& class_of);
json to_json(const QMorphism& m);

AlphabetPtr alphabet_from_json(const json& j);

// Word JSON carries its alphabet inline or as a file reference relative to
// `base_dir`; entries are a compact string or an array of letter names.
Word word_from_json(const json& j, const std::string& base_dir = ".");

Permutation permutation_from_json(const json& j);
CMorphism cmorphism_from_json(const json& j, const std::string& base_dir = ".");
Element element_from_json(const json& j);
SortedSet sorted_set_from_json(const json& j, const AlphabetPtr& alphabet);

FiniteCategory category_from_json(const json& j);
RiguetCongruence congruence_from_json(const json& j, const FiniteCategory& cat);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace monoidcats

#endif  // MONOIDCATS_JSON_IO_HPP_
