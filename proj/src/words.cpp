#include "monoidcats/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monoidcats {

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw MalformedInput("alphabet must declare at least one letter");
  }
  single_char_ = true;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& name = letters_[i];
    if (name.empty()) {
      throw MalformedInput("alphabet letter names must be non-empty");
    }
    if (!index_.emplace(name, i).second) {
      throw MalformedInput("duplicate letter in alphabet: " + name);
    }
    if (name.size() != 1) single_char_ = false;
  }
}

const std::string& Alphabet::letter(std::size_t i) const {
  if (i >= letters_.size()) {
    throw IndexOutOfRange("letter index " + std::to_string(i) +
                          " out of range for alphabet of size " +
                          std::to_string(letters_.size()));
  }
  return letters_[i];
}

bool Alphabet::contains(const std::string& name) const {
  return index_.count(name) != 0;
}

std::size_t Alphabet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownLetter(name);
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<std::string> letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr make_alphabet(const std::string& chars) {
  std::vector<std::string> letters;
  letters.reserve(chars.size());
  for (char c : chars) letters.emplace_back(1, c);
  return make_alphabet(std::move(letters));
}

Word::Word(AlphabetPtr alphabet, std::vector<std::size_t> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
  if (!alphabet_) throw MalformedInput("word requires an alphabet");
  for (std::size_t e : entries_) {
    if (e >= alphabet_->size()) {
      throw IndexOutOfRange("word entry " + std::to_string(e) +
                            " is not a letter index");
    }
  }
}

Word Word::empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

Word Word::from_letters(AlphabetPtr alphabet,
                        const std::vector<std::string>& names) {
  std::vector<std::size_t> entries;
  entries.reserve(names.size());
  for (const auto& name : names) entries.push_back(alphabet->index_of(name));
  return Word(std::move(alphabet), std::move(entries));
}

Word Word::parse(AlphabetPtr alphabet, const std::string& compact) {
  std::vector<std::size_t> entries;
  entries.reserve(compact.size());
  for (char c : compact) {
    entries.push_back(alphabet->index_of(std::string(1, c)));
  }
  return Word(std::move(alphabet), std::move(entries));
}

std::size_t Word::at(std::size_t i) const {
  if (i >= entries_.size()) {
    throw IndexOutOfRange("position " + std::to_string(i) +
                          " out of range for word of length " +
                          std::to_string(entries_.size()));
  }
  return entries_[i];
}

const std::string& Word::letter_at(std::size_t i) const {
  return alphabet_->letter(at(i));
}

std::string Word::str() const {
  if (entries_.empty()) return "_";
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0 && !alphabet_->single_char()) out << '.';
    out << alphabet_->letter(entries_[i]);
  }
  return out.str();
}

ParikhVector::ParikhVector(AlphabetPtr alphabet,
                           std::vector<std::uint64_t> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
  if (counts_.size() != alphabet_->size()) {
    throw MalformedInput("Parikh vector must have one count per letter");
  }
}

ParikhVector ParikhVector::zero(AlphabetPtr alphabet) {
  std::vector<std::uint64_t> counts(alphabet->size(), 0);
  return ParikhVector(std::move(alphabet), std::move(counts));
}

std::uint64_t ParikhVector::count(std::size_t letter_index) const {
  if (letter_index >= counts_.size()) {
    throw IndexOutOfRange("letter index out of range in Parikh vector");
  }
  return counts_[letter_index];
}

std::uint64_t ParikhVector::count(const std::string& letter) const {
  return counts_[alphabet_->index_of(letter)];
}

ParikhVector ParikhVector::operator+(const ParikhVector& other) const {
  if (!(*alphabet_ == *other.alphabet_)) throw AlphabetMismatch();
  std::vector<std::uint64_t> sums(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    sums[i] = counts_[i] + other.counts_[i];
  }
  return ParikhVector(alphabet_, std::move(sums));
}

bool ParikhVector::operator==(const ParikhVector& other) const {
  return *alphabet_ == *other.alphabet_ && counts_ == other.counts_;
}

LetterMap::LetterMap(AlphabetPtr dom, AlphabetPtr cod,
                     std::vector<std::size_t> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  if (images_.size() != dom_->size()) {
    throw MalformedInput("letter map must be total on its domain alphabet");
  }
  for (std::size_t b : images_) {
    if (b >= cod_->size()) {
      throw UnknownLetter("image index " + std::to_string(b) +
                          " outside codomain alphabet");
    }
  }
}

LetterMap LetterMap::from_names(AlphabetPtr dom, AlphabetPtr cod,
                                const std::map<std::string, std::string>& images) {
  std::vector<std::size_t> img(dom->size());
  for (std::size_t i = 0; i < dom->size(); ++i) {
    auto it = images.find(dom->letter(i));
    if (it == images.end()) {
      throw MalformedInput("letter map missing image for " + dom->letter(i));
    }
    img[i] = cod->index_of(it->second);
  }
  return LetterMap(std::move(dom), std::move(cod), std::move(img));
}

LetterMap LetterMap::identity(AlphabetPtr alphabet) {
  std::vector<std::size_t> img(alphabet->size());
  std::iota(img.begin(), img.end(), 0);
  return LetterMap(alphabet, alphabet, std::move(img));
}

std::size_t LetterMap::operator()(std::size_t letter_index) const {
  return apply(letter_index);
}

std::size_t LetterMap::apply(std::size_t letter_index) const {
  if (letter_index >= images_.size()) {
    throw IndexOutOfRange("letter index out of range in letter map");
  }
  return images_[letter_index];
}

bool LetterMap::is_identity() const {
  if (!(*dom_ == *cod_)) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

LetterMap compose(const LetterMap& g, const LetterMap& f) {
  if (!(*f.cod() == *g.dom())) {
    throw AlphabetMismatch();
  }
  std::vector<std::size_t> img(f.dom()->size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f(i));
  return LetterMap(f.dom(), g.cod(), std::move(img));
}

Word concat(const Word& u, const Word& v) {
  if (!u.same_alphabet(v)) throw AlphabetMismatch();
  std::vector<std::size_t> entries;
  entries.reserve(u.length() + v.length());
  entries.insert(entries.end(), u.entries().begin(), u.entries().end());
  entries.insert(entries.end(), v.entries().begin(), v.entries().end());
  return Word(u.alphabet_ptr(), std::move(entries));
}

std::size_t length(const Word& w) { return w.length(); }

std::size_t count(const Word& w, std::size_t letter_index) {
  if (letter_index >= w.alphabet().size()) {
    throw UnknownLetter("letter index " + std::to_string(letter_index));
  }
  return static_cast<std::size_t>(
      std::count(w.entries().begin(), w.entries().end(), letter_index));
}

std::size_t count(const Word& w, const std::string& letter) {
  return count(w, w.alphabet().index_of(letter));
}

Word subword(const Word& w, std::size_t k, std::size_t l) {
  if (!(k <= l && l < w.length())) {
    throw IndexOutOfRange("subword bounds [" + std::to_string(k) + "," +
                          std::to_string(l) + "] invalid for length " +
                          std::to_string(w.length()));
  }
  std::vector<std::size_t> entries(w.entries().begin() + static_cast<long>(k),
                                   w.entries().begin() + static_cast<long>(l) + 1);
  return Word(w.alphabet_ptr(), std::move(entries));
}

Word map_word(const LetterMap& f, const Word& w) {
  if (!(*f.dom() == w.alphabet())) throw AlphabetMismatch();
  std::vector<std::size_t> entries(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) entries[i] = f(w[i]);
  return Word(f.cod(), std::move(entries));
}

bool equiv(const Word& u, const Word& v) {
  if (!u.same_alphabet(v)) throw AlphabetMismatch();
  if (u.length() != v.length()) return false;
  return parikh(u) == parikh(v);
}

ParikhVector parikh(const Word& w) {
  std::vector<std::uint64_t> counts(w.alphabet().size(), 0);
  for (std::size_t e : w.entries()) ++counts[e];
  return ParikhVector(w.alphabet_ptr(), std::move(counts));
}

Word parikh_to_canonical_word(const ParikhVector& p) {
  std::vector<std::size_t> entries;
  for (std::size_t letter = 0; letter < p.counts().size(); ++letter) {
    for (std::uint64_t j = 0; j < p.counts()[letter]; ++j) {
      entries.push_back(letter);
    }
  }
  return Word(p.alphabet_ptr(), std::move(entries));
}

}  // namespace monoidcats
