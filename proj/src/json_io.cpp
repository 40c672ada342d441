#include "monoidcats/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace monoidcats {

json to_json(const Alphabet& a) { return json{{"letters", a.letters()}}; }

json to_json(const Word& w) {
  json j;
  j["alphabet"] = to_json(w.alphabet());
  if (w.alphabet().single_char()) {
    std::string compact;
    for (std::size_t i = 0; i < w.length(); ++i) compact += w.letter_at(i);
    j["entries"] = compact;
  } else {
    json names = json::array();
    for (std::size_t i = 0; i < w.length(); ++i) names.push_back(w.letter_at(i));
    j["entries"] = names;
  }
  return j;
}

json to_json(const ParikhVector& p) {
  json counts = json::object();
  for (std::size_t i = 0; i < p.alphabet_ptr()->size(); ++i) {
    counts[p.alphabet_ptr()->letter(i)] = p.counts()[i];
  }
  return json{{"counts", counts}};
}

json to_json(const Permutation& s) {
  return json{{"size", s.size()}, {"map", s.map()}};
}

json to_json(const CMorphism& phi) {
  return json{{"dom", to_json(phi.dom())},
              {"cod", to_json(phi.cod())},
              {"map", phi.map()}};
}

json to_json(const Element& e) {
  if (e.is_atom()) return e.atom_value();
  return json{{"x", to_json(e.inner())}, {"tag", e.tag()}};
}

json to_json(const SortedSet& x) {
  json parts = json::object();
  for (std::size_t s = 0; s < x.alphabet().size(); ++s) {
    json part = json::array();
    for (const auto& e : x.part(s)) part.push_back(to_json(e));
    parts[x.alphabet().letter(s)] = part;
  }
  return json{{"parts", parts}};
}

json to_json(const SortedMapping& h) {
  json comps = json::object();
  for (std::size_t s = 0; s < h.dom().alphabet().size(); ++s) {
    json entries = json::array();
    for (const auto& [x, y] : h.component(s)) {
      entries.push_back(json::array({to_json(x), to_json(y)}));
    }
    comps[h.dom().alphabet().letter(s)] = entries;
  }
  return json{{"dom", to_json(h.dom())},
              {"cod", to_json(h.cod())},
              {"components", comps}};
}

json to_json(const FiniteCategory& cat) {
  json homs = json::object();
  for (const auto& a : cat.objects()) {
    for (const auto& b : cat.objects()) {
      const auto& hom = cat.hom(a, b);
      if (!hom.empty()) homs[a + "->" + b] = hom;
    }
  }
  json compose = json::array();
  for (const auto& g : cat.morphisms()) {
    for (const auto& f : cat.morphisms()) {
      if (cat.cod(f) != cat.dom(g)) continue;
      compose.push_back(json::array({g, f, cat.compose(g, f)}));
    }
  }
  json ids = json::object();
  for (const auto& obj : cat.objects()) ids[obj] = cat.identity_of(obj);
  // homs keys are alphabetized by the JSON object; the morphisms array
  // preserves declaration order, which drives deterministic reporting
  return json{{"objects", cat.objects()},
              {"morphisms", cat.morphisms()},
              {"homs", homs},
              {"compose", compose},
              {"ids", ids}};
}

json to_json(const RiguetCongruence& phi) {
  json fl = json::array();
  for (const auto& [m, pairs] : phi.fl()) {
    json pj = json::array();
    for (const auto& [f, f2] : pairs) pj.push_back(json::array({f, f2}));
    fl.push_back(json{{"matrix", json::array({m.a, m.b, m.a2, m.b2})},
                      {"pairs", pj}});
  }
  return json{{"obj_blocks", phi.blocks()}, {"fl", fl}};
}

json to_json(const AxiomReport& report) {
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    json cj{{"condition", c.number},
            {"status", c.pass ? "PASS" : "FAIL"},
            {"detail", c.detail}};
    if (!c.pass) cj["witness"] = c.witness;
    conditions.push_back(cj);
  }
  return json{{"conditions", conditions}, {"all_pass", report.all_pass()}};
}

json to_json(const QObject& o, const Word& class_of) {
  return json{{"class_of", class_of.str()}, {"canonical", o.canonical().str()}};
}

json to_json(const QMorphism& m) {
  return json{{"dom", to_json(m.dom(), m.dom().canonical())},
              {"cod", to_json(m.cod(), m.cod().canonical())},
              {"rep", to_json(m.rep())}};
}

AlphabetPtr alphabet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("letters") || !j["letters"].is_array()) {
    throw MalformedInput("alphabet JSON must be {\"letters\": [...]}");
  }
  return make_alphabet(j["letters"].get<std::vector<std::string>>());
}

Word word_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("entries")) {
    throw MalformedInput("word JSON must carry \"alphabet\" and \"entries\"");
  }
  AlphabetPtr alphabet;
  if (j["alphabet"].is_string()) {
    std::filesystem::path p = j["alphabet"].get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    alphabet = alphabet_from_json(load_json_file(p.string()));
  } else {
    alphabet = alphabet_from_json(j["alphabet"]);
  }
  if (j["entries"].is_string()) {
    return Word::parse(alphabet, j["entries"].get<std::string>());
  }
  return Word::from_letters(alphabet,
                            j["entries"].get<std::vector<std::string>>());
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("map")) {
    throw MalformedInput("permutation JSON must carry \"map\"");
  }
  auto map = j["map"].get<std::vector<std::size_t>>();
  if (j.contains("size") && j["size"].get<std::size_t>() != map.size()) {
    throw MalformedInput("permutation size does not match map length");
  }
  return Permutation(std::move(map));
}

CMorphism cmorphism_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") ||
      !j.contains("map")) {
    throw MalformedInput("morphism JSON must carry \"dom\", \"cod\", \"map\"");
  }
  return CMorphism(word_from_json(j["dom"], base_dir),
                   word_from_json(j["cod"], base_dir),
                   j["map"].get<std::vector<std::size_t>>());
}

Element element_from_json(const json& j) {
  if (j.is_number_unsigned()) return Element::atom(j.get<std::uint64_t>());
  if (j.is_object() && j.contains("x") && j.contains("tag")) {
    return Element::tagged(element_from_json(j["x"]), j["tag"].get<std::string>());
  }
  throw MalformedInput("element JSON must be a number or {\"x\":...,\"tag\":...}");
}

SortedSet sorted_set_from_json(const json& j, const AlphabetPtr& alphabet) {
  if (!j.is_object() || !j.contains("parts")) {
    throw MalformedInput("sorted-set JSON must carry \"parts\"");
  }
  SortedSet x(alphabet);
  for (const auto& [letter, part] : j["parts"].items()) {
    for (const auto& e : part) x.add(letter, element_from_json(e));
  }
  return x;
}

FiniteCategory category_from_json(const json& j) {
  if (!j.is_object() || !j.contains("objects")) {
    throw MalformedInput("category JSON must carry \"objects\"");
  }
  FiniteCategory cat;
  for (const auto& obj : j["objects"]) cat.add_object(obj.get<std::string>());
  if (j.contains("homs")) {
    std::map<std::string, std::pair<std::string, std::string>> endpoints;
    std::vector<std::string> hom_order;
    for (const auto& [key, hom] : j["homs"].items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos) {
        throw MalformedInput("hom key must look like \"x->y\": " + key);
      }
      std::string dom = key.substr(0, arrow);
      std::string cod = key.substr(arrow + 2);
      for (const auto& f : hom) {
        auto id = f.get<std::string>();
        if (!endpoints.emplace(id, std::make_pair(dom, cod)).second) {
          throw MalformedInput("morphism listed in two homs: " + id);
        }
        hom_order.push_back(id);
      }
    }
    // optional explicit declaration order, ahead of the alphabetized keys
    std::set<std::string> added;
    if (j.contains("morphisms")) {
      for (const auto& f : j["morphisms"]) {
        auto id = f.get<std::string>();
        auto it = endpoints.find(id);
        if (it == endpoints.end()) {
          throw MalformedInput("morphism not present in any hom: " + id);
        }
        cat.add_morphism(id, it->second.first, it->second.second);
        added.insert(id);
      }
    }
    for (const auto& id : hom_order) {
      if (!added.count(id)) {
        const auto& [dom, cod] = endpoints.at(id);
        cat.add_morphism(id, dom, cod);
      }
    }
  }
  if (j.contains("ids")) {
    for (const auto& [obj, mor] : j["ids"].items()) {
      cat.set_identity(obj, mor.get<std::string>());
    }
  }
  if (j.contains("compose")) {
    for (const auto& entry : j["compose"]) {
      if (!entry.is_array() || entry.size() != 3) {
        throw MalformedInput("compose entries must be [g, f, gf] triples");
      }
      cat.set_compose(entry[0].get<std::string>(), entry[1].get<std::string>(),
                      entry[2].get<std::string>());
    }
  }
  cat.validate();
  return cat;
}

RiguetCongruence congruence_from_json(const json& j, const FiniteCategory& cat) {
  if (!j.is_object()) throw MalformedInput("congruence JSON must be an object");
  std::vector<std::vector<std::string>> blocks;
  if (j.contains("obj_blocks")) {
    blocks = j["obj_blocks"].get<std::vector<std::vector<std::string>>>();
  }
  std::map<Matrix, std::set<std::pair<std::string, std::string>>> fl;
  if (j.contains("fl")) {
    for (const auto& entry : j["fl"]) {
      const auto& mj = entry.at("matrix");
      if (!mj.is_array() || mj.size() != 4) {
        throw MalformedInput("fl matrix must be [a, b, a', b']");
      }
      Matrix m{mj[0].get<std::string>(), mj[1].get<std::string>(),
               mj[2].get<std::string>(), mj[3].get<std::string>()};
      for (const auto& p : entry.at("pairs")) {
        fl[m].insert({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
      }
    }
  }
  return RiguetCongruence(cat, std::move(blocks), std::move(fl));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw MalformedInput("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace monoidcats
