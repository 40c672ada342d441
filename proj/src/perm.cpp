#include "monoidcats/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace monoidcats {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw MalformedInput("permutation map is not a bijection of {0..n-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::from_cycles(std::size_t n, const std::string& text) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::vector<bool> moved(n, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw MalformedInput("expected '(' in cycle notation: " + text);
    }
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) {
        throw MalformedInput("expected index in cycle notation: " + text);
      }
      std::size_t value = std::stoull(text.substr(start, i - start));
      if (value >= n) {
        throw IndexOutOfRange("cycle entry " + std::to_string(value) +
                              " out of range for size " + std::to_string(n));
      }
      if (moved[value]) {
        throw MalformedInput("index repeated across cycles: " +
                             std::to_string(value));
      }
      moved[value] = true;
      cycle.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) {
      throw MalformedInput("unterminated cycle in: " + text);
    }
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      map[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(map));
}

std::size_t Permutation::apply(std::size_t i) const {
  if (i >= map_.size()) {
    throw IndexOutOfRange("permutation applied outside {0..n-1}");
  }
  return map_[i];
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::vector<bool> visited(map_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (visited[i] || map_[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!visited[j]) {
      visited[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = map_[j];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

std::string Permutation::one_line() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i > 0) out << ',';
    out << map_[i];
  }
  out << ']';
  return out.str();
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) {
    throw SizeMismatch("cannot compose permutations of sizes " +
                       std::to_string(s.size()) + " and " +
                       std::to_string(t.size()));
  }
  std::vector<std::size_t> map(s.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = s(t(i));
  return Permutation(std::move(map));
}

Permutation invert(const Permutation& s) {
  std::vector<std::size_t> map(s.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[s(i)] = i;
  return Permutation(std::move(map));
}

Word apply_right_action(const Word& w, const Permutation& s) {
  if (w.length() != s.size()) {
    throw SizeMismatch("permutation size " + std::to_string(s.size()) +
                       " does not match word length " +
                       std::to_string(w.length()));
  }
  std::vector<std::size_t> entries(w.length());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = w[s(i)];
  return Word(w.alphabet_ptr(), std::move(entries));
}

std::size_t occ(const Word& w, std::size_t i) {
  if (i >= w.length()) {
    throw IndexOutOfRange("occ index " + std::to_string(i) +
                          " out of range for word of length " +
                          std::to_string(w.length()));
  }
  std::size_t rank = 0;
  for (std::size_t k = 0; k < i; ++k) {
    if (w[k] == w[i]) ++rank;
  }
  return rank;
}

std::size_t pos(const Word& w, std::size_t letter_index, std::size_t j) {
  if (letter_index >= w.alphabet().size()) {
    throw UnknownLetter("letter index " + std::to_string(letter_index));
  }
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i] == letter_index) {
      if (rank == j) return i;
      ++rank;
    }
  }
  throw OccurrenceOutOfRange("occurrence " + std::to_string(j) +
                             " out of range: letter occurs " +
                             std::to_string(rank) + " times");
}

std::size_t pos(const Word& w, const std::string& letter, std::size_t j) {
  return pos(w, w.alphabet().index_of(letter), j);
}

Permutation canonical_perm(const Word& u, const Word& v) {
  if (!equiv(u, v)) throw NotEquivalent();
  std::vector<std::size_t> map(u.length());
  for (std::size_t i = 0; i < u.length(); ++i) {
    map[i] = pos(v, u[i], occ(u, i));
  }
  Permutation sigma(std::move(map));
  // Postcondition u = v o sigma; a failure here is an occ/pos bug.
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (u[i] != v[sigma(i)]) {
      throw Error("InternalError",
                  "canonical permutation postcondition failed at index " +
                      std::to_string(i));
    }
  }
  return sigma;
}

}  // namespace monoidcats
