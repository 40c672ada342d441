#include "monoidcats/msets.hpp"

#include <algorithm>

namespace monoidcats {

Element Element::atom(std::uint64_t n) { return Element(n, nullptr, ""); }

Element Element::tagged(Element inner, std::string tag) {
  return Element(0, std::make_shared<const Element>(std::move(inner)),
                 std::move(tag));
}

std::uint64_t Element::atom_value() const {
  if (!is_atom()) throw MalformedElement("expected an atom, got " + str());
  return value_;
}

const Element& Element::inner() const {
  if (is_atom()) throw MalformedElement("expected a tagged element, got " + str());
  return *inner_;
}

const std::string& Element::tag() const {
  if (is_atom()) throw MalformedElement("expected a tagged element, got " + str());
  return tag_;
}

std::string Element::str() const {
  if (is_atom()) return std::to_string(value_);
  return "(" + inner_->str() + "," + tag_ + ")";
}

std::strong_ordering Element::operator<=>(const Element& other) const {
  if (is_atom() != other.is_atom()) {
    return is_atom() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (is_atom()) return value_ <=> other.value_;
  if (auto c = (*inner_ <=> *other.inner_); c != std::strong_ordering::equal) {
    return c;
  }
  return tag_ <=> other.tag_;
}

SortedSet::SortedSet(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)), parts_(alphabet_->size()) {}

void SortedSet::add(std::size_t letter_index, Element e) {
  if (letter_index >= parts_.size()) {
    throw UnknownLetter("letter index " + std::to_string(letter_index));
  }
  parts_[letter_index].insert(std::move(e));
}

void SortedSet::add(const std::string& letter, Element e) {
  add(alphabet_->index_of(letter), std::move(e));
}

const std::set<Element>& SortedSet::part(std::size_t letter_index) const {
  if (letter_index >= parts_.size()) {
    throw UnknownLetter("letter index " + std::to_string(letter_index));
  }
  return parts_[letter_index];
}

const std::set<Element>& SortedSet::part(const std::string& letter) const {
  return part(alphabet_->index_of(letter));
}

bool SortedSet::contains(std::size_t letter_index, const Element& e) const {
  return part(letter_index).count(e) != 0;
}

std::size_t SortedSet::card() const {
  std::size_t total = 0;
  for (const auto& p : parts_) total += p.size();
  return total;
}

std::vector<std::size_t> SortedSet::supp() const {
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!parts_[i].empty()) result.push_back(i);
  }
  return result;
}

bool SortedSet::operator==(const SortedSet& other) const {
  return *alphabet_ == *other.alphabet_ && parts_ == other.parts_;
}

SortedMapping::SortedMapping(SortedSet dom, SortedSet cod,
                             std::vector<std::map<Element, Element>> components)
    : dom_(std::move(dom)), cod_(std::move(cod)), components_(std::move(components)) {
  if (!(dom_.alphabet() == cod_.alphabet())) throw AlphabetMismatch();
  if (components_.size() != dom_.alphabet().size()) {
    throw SortMismatch("expected one component per letter");
  }
  for (std::size_t s = 0; s < components_.size(); ++s) {
    const auto& comp = components_[s];
    if (comp.size() != dom_.part(s).size()) {
      throw SortMismatch("component for sort " + dom_.alphabet().letter(s) +
                         " is not total on the domain part");
    }
    for (const auto& [x, y] : comp) {
      if (!dom_.contains(s, x)) {
        throw SortMismatch("component entry " + x.str() +
                           " is not in the domain part of sort " +
                           dom_.alphabet().letter(s));
      }
      if (!cod_.contains(s, y)) {
        throw SortMismatch("component image " + y.str() +
                           " is not in the codomain part of sort " +
                           dom_.alphabet().letter(s));
      }
    }
  }
}

SortedMapping SortedMapping::identity(const SortedSet& x) {
  std::vector<std::map<Element, Element>> comps(x.alphabet().size());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    for (const auto& e : x.part(s)) comps[s].emplace(e, e);
  }
  return SortedMapping(x, x, std::move(comps));
}

const std::map<Element, Element>& SortedMapping::component(
    std::size_t letter_index) const {
  if (letter_index >= components_.size()) {
    throw UnknownLetter("letter index " + std::to_string(letter_index));
  }
  return components_[letter_index];
}

Element SortedMapping::apply(std::size_t letter_index, const Element& e) const {
  const auto& comp = component(letter_index);
  auto it = comp.find(e);
  if (it == comp.end()) {
    throw SortMismatch("element " + e.str() + " not in domain of sort " +
                       dom_.alphabet().letter(letter_index));
  }
  return it->second;
}

bool SortedMapping::is_bijective() const {
  for (std::size_t s = 0; s < components_.size(); ++s) {
    std::set<Element> image;
    for (const auto& [x, y] : components_[s]) image.insert(y);
    if (image.size() != cod_.part(s).size() ||
        image.size() != components_[s].size()) {
      return false;
    }
  }
  return true;
}

bool SortedMapping::operator==(const SortedMapping& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ &&
         components_ == other.components_;
}

SortedMapping compose(const SortedMapping& k, const SortedMapping& h) {
  if (!(h.cod() == k.dom())) {
    throw NotComposable("sorted mappings are not composable");
  }
  std::vector<std::map<Element, Element>> comps(h.dom().alphabet().size());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    for (const auto& [x, y] : h.component(s)) {
      comps[s].emplace(x, k.apply(s, y));
    }
  }
  return SortedMapping(h.dom(), k.cod(), std::move(comps));
}

SortedSet coproduct_obj(const LetterMap& f, const SortedSet& x) {
  if (!(*f.dom() == x.alphabet())) throw AlphabetMismatch();
  SortedSet result(f.cod());
  for (std::size_t a = 0; a < x.alphabet().size(); ++a) {
    const std::string& tag = x.alphabet().letter(a);
    for (const auto& e : x.part(a)) {
      result.add(f(a), Element::tagged(e, tag));
    }
  }
  return result;
}

SortedMapping coproduct_mor(const LetterMap& f, const SortedMapping& h) {
  SortedSet dom = coproduct_obj(f, h.dom());
  SortedSet cod = coproduct_obj(f, h.cod());
  std::vector<std::map<Element, Element>> comps(f.cod()->size());
  for (std::size_t a = 0; a < h.dom().alphabet().size(); ++a) {
    const std::string& tag = h.dom().alphabet().letter(a);
    for (const auto& [x, y] : h.component(a)) {
      comps[f(a)].emplace(Element::tagged(x, tag), Element::tagged(y, tag));
    }
  }
  return SortedMapping(std::move(dom), std::move(cod), std::move(comps));
}

SortedMapping pr_iso(const SortedSet& x) {
  LetterMap id = LetterMap::identity(x.alphabet_ptr());
  SortedSet dom = coproduct_obj(id, x);
  std::vector<std::map<Element, Element>> comps(x.alphabet().size());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    for (const auto& e : dom.part(s)) {
      if (e.is_atom() || e.tag() != x.alphabet().letter(s)) {
        throw MalformedElement("element " + e.str() +
                               " is not tagged with its sort");
      }
      comps[s].emplace(e, e.inner());
    }
  }
  return SortedMapping(std::move(dom), x, std::move(comps));
}

SortedMapping alpha_iso(const LetterMap& f, const LetterMap& g,
                        const SortedSet& x) {
  LetterMap gf = compose(g, f);
  SortedSet dom = coproduct_obj(gf, x);
  SortedSet cod = coproduct_obj(g, coproduct_obj(f, x));
  std::vector<std::map<Element, Element>> comps(g.cod()->size());
  for (std::size_t a = 0; a < x.alphabet().size(); ++a) {
    const std::string& tag_a = x.alphabet().letter(a);
    const std::string& tag_fa = f.cod()->letter(f(a));
    for (const auto& e : x.part(a)) {
      comps[gf(a)].emplace(Element::tagged(e, tag_a),
                           Element::tagged(Element::tagged(e, tag_a), tag_fa));
    }
  }
  return SortedMapping(std::move(dom), std::move(cod), std::move(comps));
}

SortedSet vs_obj(const Word& a) {
  SortedSet result(a.alphabet_ptr());
  for (std::size_t i = 0; i < a.length(); ++i) {
    result.add(a[i], Element::atom(i));
  }
  return result;
}

SortedMapping vs_mor(const CMorphism& phi) {
  SortedSet dom = vs_obj(phi.dom());
  SortedSet cod = vs_obj(phi.cod());
  std::vector<std::map<Element, Element>> comps(phi.dom().alphabet().size());
  for (std::size_t i = 0; i < phi.dom().length(); ++i) {
    comps[phi.dom()[i]].emplace(Element::atom(i), Element::atom(phi(i)));
  }
  return SortedMapping(std::move(dom), std::move(cod), std::move(comps));
}

CMorphism vs_full_inverse(const Word& a, const Word& b,
                          const SortedMapping& h) {
  if (!(h.dom() == vs_obj(a)) || !(h.cod() == vs_obj(b))) {
    throw SortMismatch("mapping is not typed between the position sets of the words");
  }
  std::vector<std::size_t> map(a.length());
  for (std::size_t i = 0; i < a.length(); ++i) {
    map[i] = static_cast<std::size_t>(h.apply(a[i], Element::atom(i)).atom_value());
  }
  return CMorphism(a, b, std::move(map));
}

Word sorted_set_to_word(const SortedSet& x) {
  std::vector<std::size_t> entries;
  for (std::size_t s = 0; s < x.alphabet().size(); ++s) {
    entries.insert(entries.end(), x.part(s).size(), s);
  }
  return Word(x.alphabet_ptr(), std::move(entries));
}

SortedMapping sorted_set_to_word_witness(const SortedSet& x) {
  Word w = sorted_set_to_word(x);
  SortedSet cod = vs_obj(w);
  std::vector<std::map<Element, Element>> comps(x.alphabet().size());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    std::size_t j = 0;
    for (const auto& e : x.part(s)) {
      comps[s].emplace(e, Element::atom(pos(w, s, j)));
      ++j;
    }
  }
  return SortedMapping(x, std::move(cod), std::move(comps));
}

SortedMapping beta_iso(const LetterMap& f, const Word& a) {
  SortedSet dom = coproduct_obj(f, vs_obj(a));
  SortedSet cod = vs_obj(map_word(f, a));
  std::vector<std::map<Element, Element>> comps(f.cod()->size());
  for (std::size_t b = 0; b < comps.size(); ++b) {
    for (const auto& e : dom.part(b)) {
      if (e.is_atom() || !e.inner().is_atom()) {
        throw MalformedElement("expected a tagged atom, got " + e.str());
      }
      comps[b].emplace(e, e.inner());
    }
  }
  return SortedMapping(std::move(dom), std::move(cod), std::move(comps));
}

}  // namespace monoidcats
