#ifndef MONOIDCATS_DOT_HPP_
#define MONOIDCATS_DOT_HPP_

#include <cstddef>
#include <string>

#include "monoidcats/riguet.hpp"

namespace monoidcats {

inline constexpr std::size_t kDefaultDotObjectCap = 200;

// Renders the category as a DOT digraph: one node per object, one edge per
// non-identity morphism, deterministic declaration order. Refuses categories
// with more than `object_cap` objects.
std::string to_dot(const FiniteCategory& cat,
                   std::size_t object_cap = kDefaultDotObjectCap);

}  // namespace monoidcats

#endif  // MONOIDCATS_DOT_HPP_
