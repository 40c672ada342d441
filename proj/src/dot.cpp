#include "monoidcats/dot.hpp"

#include <sstream>

namespace monoidcats {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FiniteCategory& cat, std::size_t object_cap) {
  if (cat.objects().size() > object_cap) {
    throw TooLarge("category has " + std::to_string(cat.objects().size()) +
                   " objects, above the DOT cap of " + std::to_string(object_cap));
  }
  std::ostringstream out;
  out << "digraph category {\n";
  for (std::size_t i = 0; i < cat.objects().size(); ++i) {
    out << "  n" << i << " [label=\"" << escape(cat.objects()[i]) << "\"];\n";
  }
  for (const auto& f : cat.morphisms()) {
    if (f == cat.identity_of(cat.dom(f))) continue;
    out << "  n" << cat.object_index(cat.dom(f)) << " -> n"
        << cat.object_index(cat.cod(f)) << " [label=\"" << escape(f) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace monoidcats
