#include "monoidcats/riguet.hpp"

#include <algorithm>
#include <cstdint>

namespace monoidcats {

const std::vector<std::string> FiniteCategory::kEmptyHom = {};
const std::set<std::pair<std::string, std::string>> RiguetCongruence::kEmptyPairs = {};

void FiniteCategory::add_object(const std::string& id) {
  if (!obj_index_.emplace(id, objects_.size()).second) {
    throw MalformedCategory("duplicate object id: " + id);
  }
  objects_.push_back(id);
}

void FiniteCategory::add_morphism(const std::string& id, const std::string& dom,
                                  const std::string& cod) {
  if (!has_object(dom) || !has_object(cod)) {
    throw MalformedCategory("morphism " + id + " references unknown object");
  }
  if (!mor_index_.emplace(id, morphisms_.size()).second) {
    throw MalformedCategory("duplicate morphism id: " + id);
  }
  morphisms_.push_back(id);
  endpoints_.emplace(id, std::make_pair(dom, cod));
  homs_[{dom, cod}].push_back(id);
}

void FiniteCategory::set_identity(const std::string& obj, const std::string& mor) {
  if (!has_object(obj)) throw MalformedCategory("unknown object: " + obj);
  if (!has_morphism(mor)) throw MalformedCategory("unknown morphism: " + mor);
  identities_[obj] = mor;
}

void FiniteCategory::set_compose(const std::string& g, const std::string& f,
                                 const std::string& gf) {
  if (!has_morphism(g) || !has_morphism(f) || !has_morphism(gf)) {
    throw MalformedCategory("compose entry references unknown morphism");
  }
  compose_[{g, f}] = gf;
}

bool FiniteCategory::has_object(const std::string& id) const {
  return obj_index_.count(id) != 0;
}

bool FiniteCategory::has_morphism(const std::string& id) const {
  return mor_index_.count(id) != 0;
}

std::size_t FiniteCategory::object_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  if (it == obj_index_.end()) throw MalformedCategory("unknown object: " + id);
  return it->second;
}

std::size_t FiniteCategory::morphism_index(const std::string& id) const {
  auto it = mor_index_.find(id);
  if (it == mor_index_.end()) throw MalformedCategory("unknown morphism: " + id);
  return it->second;
}

const std::string& FiniteCategory::dom(const std::string& mor) const {
  auto it = endpoints_.find(mor);
  if (it == endpoints_.end()) throw MalformedCategory("unknown morphism: " + mor);
  return it->second.first;
}

const std::string& FiniteCategory::cod(const std::string& mor) const {
  auto it = endpoints_.find(mor);
  if (it == endpoints_.end()) throw MalformedCategory("unknown morphism: " + mor);
  return it->second.second;
}

const std::string& FiniteCategory::identity_of(const std::string& obj) const {
  auto it = identities_.find(obj);
  if (it == identities_.end()) {
    throw MalformedCategory("no identity recorded for object: " + obj);
  }
  return it->second;
}

const std::vector<std::string>& FiniteCategory::hom(const std::string& a,
                                                    const std::string& b) const {
  auto it = homs_.find({a, b});
  return it == homs_.end() ? kEmptyHom : it->second;
}

std::string FiniteCategory::compose(const std::string& g,
                                    const std::string& f) const {
  auto it = compose_.find({g, f});
  if (it == compose_.end()) {
    throw NotComposable("no composition recorded for (" + g + ", " + f + ")");
  }
  return it->second;
}

void FiniteCategory::validate() const {
  for (const auto& obj : objects_) {
    const std::string& id = identity_of(obj);
    if (dom(id) != obj || cod(id) != obj) {
      throw MalformedCategory("identity of " + obj + " is not an endomorphism");
    }
  }
  // compose defined exactly for composable pairs, with matching endpoints
  for (const auto& g : morphisms_) {
    for (const auto& f : morphisms_) {
      bool composable = cod(f) == dom(g);
      auto it = compose_.find({g, f});
      if (composable && it == compose_.end()) {
        throw MalformedCategory("missing composition for (" + g + ", " + f + ")");
      }
      if (!composable && it != compose_.end()) {
        throw MalformedCategory("composition recorded for non-composable pair (" +
                                g + ", " + f + ")");
      }
      if (composable) {
        const std::string& gf = it->second;
        if (dom(gf) != dom(f) || cod(gf) != cod(g)) {
          throw MalformedCategory("composition (" + g + ", " + f +
                                  ") has wrong endpoints");
        }
      }
    }
  }
  // unit laws
  for (const auto& f : morphisms_) {
    if (compose(identity_of(cod(f)), f) != f || compose(f, identity_of(dom(f))) != f) {
      throw MalformedCategory("unit law fails for morphism " + f);
    }
  }
  // associativity
  for (const auto& f : morphisms_) {
    for (const auto& g : morphisms_) {
      if (cod(f) != dom(g)) continue;
      const std::string gf = compose(g, f);
      for (const auto& h : morphisms_) {
        if (cod(g) != dom(h)) continue;
        if (compose(h, gf) != compose(compose(h, g), f)) {
          throw MalformedCategory("associativity fails for (" + h + ", " + g +
                                  ", " + f + ")");
        }
      }
    }
  }
}

RiguetCongruence::RiguetCongruence(
    const FiniteCategory& cat, std::vector<std::vector<std::string>> obj_blocks,
    std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl)
    : fl_(std::move(fl)) {
  // Blocks listed explicitly; unlisted objects become singletons. Blocks are
  // normalized to declaration order of their least member.
  std::map<std::string, std::size_t> assigned;
  for (auto& block : obj_blocks) {
    if (block.empty()) throw MalformedCongruence("empty object block");
    for (const auto& obj : block) {
      if (!cat.has_object(obj)) {
        throw MalformedCongruence("block references unknown object: " + obj);
      }
      if (assigned.count(obj)) {
        throw MalformedCongruence("object in two blocks: " + obj);
      }
      assigned[obj] = 1;
    }
  }
  for (const auto& obj : cat.objects()) {
    if (!assigned.count(obj)) obj_blocks.push_back({obj});
  }
  for (auto& block : obj_blocks) {
    std::sort(block.begin(), block.end(),
              [&](const std::string& x, const std::string& y) {
                return cat.object_index(x) < cat.object_index(y);
              });
  }
  std::sort(obj_blocks.begin(), obj_blocks.end(),
            [&](const auto& x, const auto& y) {
              return cat.object_index(x.front()) < cat.object_index(y.front());
            });
  blocks_ = std::move(obj_blocks);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (const auto& obj : blocks_[i]) block_of_[obj] = i;
  }
  for (const auto& [m, pairs] : fl_) {
    if (!cat.has_object(m.a) || !cat.has_object(m.b) || !cat.has_object(m.a2) ||
        !cat.has_object(m.b2)) {
      throw MalformedCongruence("matrix references unknown object");
    }
    if (!obj_related(m.a, m.a2) || !obj_related(m.b, m.b2)) {
      throw MalformedCongruence("matrix rows are not equivalent objects");
    }
    for (const auto& [f, f2] : pairs) {
      if (!cat.has_morphism(f) || !cat.has_morphism(f2)) {
        throw MalformedCongruence("pair references unknown morphism");
      }
      if (cat.dom(f) != m.a || cat.cod(f) != m.b || cat.dom(f2) != m.a2 ||
          cat.cod(f2) != m.b2) {
        throw MalformedCongruence("pair (" + f + ", " + f2 +
                                  ") not typed by its matrix");
      }
    }
  }
}

RiguetCongruence RiguetCongruence::diagonal(const FiniteCategory& cat) {
  std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl;
  for (const auto& f : cat.morphisms()) {
    fl[{cat.dom(f), cat.cod(f), cat.dom(f), cat.cod(f)}].insert({f, f});
  }
  return RiguetCongruence(cat, {}, std::move(fl));
}

bool RiguetCongruence::obj_related(const std::string& x, const std::string& y) const {
  return block_of(x) == block_of(y);
}

std::size_t RiguetCongruence::block_of(const std::string& obj) const {
  auto it = block_of_.find(obj);
  if (it == block_of_.end()) {
    throw MalformedCongruence("object not covered by partition: " + obj);
  }
  return it->second;
}

const std::set<std::pair<std::string, std::string>>& RiguetCongruence::pairs(
    const Matrix& m) const {
  auto it = fl_.find(m);
  return it == fl_.end() ? kEmptyPairs : it->second;
}

bool RiguetCongruence::related(const Matrix& m, const std::string& f,
                               const std::string& f2) const {
  return pairs(m).count({f, f2}) != 0;
}

RiguetCongruence RiguetCongruence::with_pair_removed(
    const Matrix& m, const std::pair<std::string, std::string>& p) const {
  RiguetCongruence copy = *this;
  auto it = copy.fl_.find(m);
  if (it != copy.fl_.end()) {
    it->second.erase(p);
    if (it->second.empty()) copy.fl_.erase(it);
  }
  return copy;
}

RiguetCongruence RiguetCongruence::with_pair_added(
    const Matrix& m, const std::pair<std::string, std::string>& p) const {
  RiguetCongruence copy = *this;
  copy.fl_[m].insert(p);
  return copy;
}

namespace {

// Matrices with equivalent rows, in lexicographic declaration order.
std::vector<Matrix> all_matrices(const FiniteCategory& cat,
                                 const RiguetCongruence& phi) {
  std::vector<Matrix> result;
  for (const auto& a : cat.objects()) {
    for (const auto& b : cat.objects()) {
      for (const auto& a2 : cat.objects()) {
        if (!phi.obj_related(a, a2)) continue;
        for (const auto& b2 : cat.objects()) {
          if (!phi.obj_related(b, b2)) continue;
          result.push_back({a, b, a2, b2});
        }
      }
    }
  }
  return result;
}

}  // namespace

AxiomReport check_riguet_axioms(const FiniteCategory& cat,
                                const RiguetCongruence& phi) {
  AxiomReport report;
  const std::vector<Matrix> matrices = all_matrices(cat, phi);

  // 1: diagonal containment
  {
    AxiomReport::Condition c{1, true, {}, "diagonal containment"};
    for (const auto& a : cat.objects()) {
      for (const auto& b : cat.objects()) {
        for (const auto& f : cat.hom(a, b)) {
          if (!phi.related({a, b, a, b}, f, f)) {
            c.pass = false;
            c.witness = {a, b, f};
            goto done1;
          }
        }
      }
    }
  done1:
    report.conditions.push_back(std::move(c));
  }

  // 2: inverse symmetry
  {
    AxiomReport::Condition c{2, true, {}, "inverse symmetry"};
    for (const auto& m : matrices) {
      const Matrix mirror{m.a2, m.b2, m.a, m.b};
      for (const auto& [f, f2] : phi.pairs(m)) {
        if (!phi.related(mirror, f2, f)) {
          c.pass = false;
          c.witness = {m.a, m.b, m.a2, m.b2, f, f2};
          goto done2;
        }
      }
    }
  done2:
    report.conditions.push_back(std::move(c));
  }

  // 3: relational-composition closure
  {
    AxiomReport::Condition c{3, true, {}, "relational-composition closure"};
    for (const auto& m : matrices) {
      for (const auto& [f, f2] : phi.pairs(m)) {
        for (const auto& a3 : cat.objects()) {
          if (!phi.obj_related(m.a2, a3)) continue;
          for (const auto& b3 : cat.objects()) {
            if (!phi.obj_related(m.b2, b3)) continue;
            for (const auto& [g2, g3] : phi.pairs({m.a2, m.b2, a3, b3})) {
              if (g2 != f2) continue;
              if (!phi.related({m.a, m.b, a3, b3}, f, g3)) {
                c.pass = false;
                c.witness = {m.a, m.b, m.a2, m.b2, a3, b3, f, f2, g3};
                goto done3;
              }
            }
          }
        }
      }
    }
  done3:
    report.conditions.push_back(std::move(c));
  }

  // 4: horizontal compatibility with composition
  {
    AxiomReport::Condition c{4, true, {}, "compatibility with composition"};
    for (const auto& m : matrices) {
      for (const auto& [f, f2] : phi.pairs(m)) {
        for (const auto& cobj : cat.objects()) {
          for (const auto& c2 : cat.objects()) {
            if (!phi.obj_related(cobj, c2)) continue;
            for (const auto& [g, g2] : phi.pairs({m.b, cobj, m.b2, c2})) {
              const std::string gf = cat.compose(g, f);
              const std::string g2f2 = cat.compose(g2, f2);
              if (!phi.related({m.a, cobj, m.a2, c2}, gf, g2f2)) {
                c.pass = false;
                c.witness = {m.a, m.b, m.a2, m.b2, f, f2, g, g2};
                goto done4;
              }
            }
          }
        }
      }
    }
  done4:
    report.conditions.push_back(std::move(c));
  }

  // 5: lifting existence
  {
    AxiomReport::Condition c{5, true, {}, "lifting existence"};
    for (const auto& m : matrices) {
      for (const auto& f : cat.hom(m.a, m.b)) {
        bool found = false;
        for (const auto& f2 : cat.hom(m.a2, m.b2)) {
          if (phi.related(m, f, f2)) {
            found = true;
            break;
          }
        }
        if (!found) {
          c.pass = false;
          c.witness = {m.a, m.b, m.a2, m.b2, f};
          goto done5;
        }
      }
    }
  done5:
    report.conditions.push_back(std::move(c));
  }

  return report;
}

std::set<std::string> morph_class(const FiniteCategory& cat,
                                  const RiguetCongruence& phi,
                                  const std::string& f) {
  const std::string& a = cat.dom(f);
  const std::string& b = cat.cod(f);
  std::set<std::string> members;
  for (const auto& a2 : cat.objects()) {
    if (!phi.obj_related(a, a2)) continue;
    for (const auto& b2 : cat.objects()) {
      if (!phi.obj_related(b, b2)) continue;
      for (const auto& [g, g2] : phi.pairs({a, b, a2, b2})) {
        if (g == f) members.insert(g2);
      }
    }
  }
  return members;
}

QuotientCategory quotient(const FiniteCategory& cat, const RiguetCongruence& phi) {
  AxiomReport report = check_riguet_axioms(cat, phi);
  if (!report.all_pass()) {
    throw AxiomsNotVerified("congruence fails a Riguet axiom; quotient refused");
  }

  QuotientCategory q;
  auto first_by_decl = [&](const std::set<std::string>& mors) {
    std::size_t best = SIZE_MAX;
    std::string result;
    for (const auto& m : mors) {
      std::size_t idx = cat.morphism_index(m);
      if (idx < best) {
        best = idx;
        result = m;
      }
    }
    return result;
  };

  std::vector<std::string> block_ids;
  for (const auto& block : phi.blocks()) {
    std::string id = "[" + block.front() + "]";
    q.cat.add_object(id);
    block_ids.push_back(id);
    for (const auto& obj : block) q.object_map[obj] = id;
  }

  // classes, grouped by membership set (equal classes <=> related pairs)
  std::map<std::string, std::set<std::string>> class_members;  // class id -> members
  for (const auto& f : cat.morphisms()) {
    std::set<std::string> members = morph_class(cat, phi, f);
    std::string class_id = "[" + first_by_decl(members) + "]";
    q.morphism_map[f] = class_id;
    class_members.emplace(class_id, std::move(members));
  }
  // declare quotient morphisms in declaration order of their first member
  for (const auto& f : cat.morphisms()) {
    const std::string& class_id = q.morphism_map[f];
    if (!q.cat.has_morphism(class_id)) {
      q.cat.add_morphism(class_id, q.object_map.at(cat.dom(f)),
                         q.object_map.at(cat.cod(f)));
    }
  }
  for (const auto& block : phi.blocks()) {
    q.cat.set_identity(q.object_map.at(block.front()),
                       q.morphism_map.at(cat.identity_of(block.front())));
  }
  // composition via representatives; well-defined by the axioms
  for (const auto& f : cat.morphisms()) {
    for (const auto& g : cat.morphisms()) {
      const std::string& F = q.morphism_map.at(f);
      const std::string& G = q.morphism_map.at(g);
      if (q.cat.cod(F) != q.cat.dom(G)) continue;
      // find composable members of the two classes
      bool set = false;
      for (const auto& fm : class_members.at(F)) {
        if (set) break;
        for (const auto& gm : class_members.at(G)) {
          if (cat.cod(fm) == cat.dom(gm)) {
            q.cat.set_compose(G, F, q.morphism_map.at(cat.compose(gm, fm)));
            set = true;
            break;
          }
        }
      }
      if (!set) {
        throw AxiomsNotVerified("no composable representatives for classes " +
                                F + " and " + G);
      }
    }
  }
  q.cat.validate();
  return q;
}

RiguetCongruence from_strong_congruence(
    const FiniteCategory& cat,
    const std::vector<std::vector<std::string>>& morphism_blocks) {
  std::map<std::string, std::size_t> block_of;
  std::vector<std::vector<std::string>> blocks = morphism_blocks;
  std::set<std::string> seen;
  for (const auto& block : blocks) {
    if (block.empty()) throw NotACongruence("empty morphism block");
    const std::string& first = block.front();
    if (!cat.has_morphism(first)) {
      throw NotACongruence("unknown morphism: " + first);
    }
    for (const auto& m : block) {
      if (!cat.has_morphism(m)) throw NotACongruence("unknown morphism: " + m);
      if (cat.dom(m) != cat.dom(first) || cat.cod(m) != cat.cod(first)) {
        throw NotACongruence("block contains non-parallel morphisms: " + first +
                             " and " + m);
      }
      if (!seen.insert(m).second) {
        throw NotACongruence("morphism in two blocks: " + m);
      }
    }
  }
  for (const auto& m : cat.morphisms()) {
    if (!seen.count(m)) blocks.push_back({m});
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (const auto& m : blocks[i]) block_of[m] = i;
  }
  // composition-respect
  for (const auto& f : cat.morphisms()) {
    for (const auto& f2 : cat.morphisms()) {
      if (block_of[f] != block_of[f2]) continue;
      for (const auto& g : cat.morphisms()) {
        for (const auto& g2 : cat.morphisms()) {
          if (block_of[g] != block_of[g2]) continue;
          if (cat.cod(f) != cat.dom(g)) continue;
          if (block_of[cat.compose(g, f)] != block_of[cat.compose(g2, f2)]) {
            throw NotACongruence(
                "relation does not respect composition at (" + g + ", " + f + ")");
          }
        }
      }
    }
  }
  std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl;
  for (const auto& f : cat.morphisms()) {
    for (const auto& f2 : cat.morphisms()) {
      if (block_of[f] != block_of[f2]) continue;
      fl[{cat.dom(f), cat.cod(f), cat.dom(f2), cat.cod(f2)}].insert({f, f2});
    }
  }
  return RiguetCongruence(cat, {}, std::move(fl));
}

RiguetCongruence intersect(const FiniteCategory& cat,
                           const RiguetCongruence& phi1,
                           const RiguetCongruence& phi2) {
  // meet of partitions: objects sharing both block memberships
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> meet;
  for (const auto& obj : cat.objects()) {
    meet[{phi1.block_of(obj), phi2.block_of(obj)}].push_back(obj);
  }
  std::vector<std::vector<std::string>> blocks;
  for (auto& [key, block] : meet) blocks.push_back(std::move(block));

  std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl;
  for (const auto& [m, pairs] : phi1.fl()) {
    if (phi2.block_of(m.a) != phi2.block_of(m.a2)) continue;
    if (phi2.block_of(m.b) != phi2.block_of(m.b2)) continue;
    std::set<std::pair<std::string, std::string>> both;
    for (const auto& p : pairs) {
      if (phi2.related(m, p.first, p.second)) both.insert(p);
    }
    if (!both.empty()) fl[m] = std::move(both);
  }
  return RiguetCongruence(cat, std::move(blocks), std::move(fl));
}

}  // namespace monoidcats
