// Command-line surface over the library: compute, verify, enumerate, export.
//
// Exit codes: 0 success, 1 property/axiom failure, 2 input or domain error,
// 3 cap exceeded.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monoidcats/cat_c.hpp"
#include "monoidcats/dot.hpp"
#include "monoidcats/json_io.hpp"
#include "monoidcats/perm.hpp"
#include "monoidcats/quotient_q.hpp"
#include "monoidcats/riguet.hpp"
#include "monoidcats/verify.hpp"
#include "monoidcats/words.hpp"

namespace {

using monoidcats::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("MONOIDCATS_CAP")) {
    return std::stoull(env);
  }
  return monoidcats::kDefaultEnumerationCap;
}

// Bare word strings use the single-character convention. The alphabet is
// either given explicitly ("abc" or a JSON file) or inferred as the sorted
// set of characters appearing in the words.
monoidcats::AlphabetPtr resolve_alphabet(const std::string& spec,
                                         const std::vector<std::string>& words) {
  if (!spec.empty()) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
      return monoidcats::alphabet_from_json(monoidcats::load_json_file(spec));
    }
    return monoidcats::make_alphabet(spec);
  }
  std::set<char> chars;
  for (const auto& w : words) {
    for (char c : w) {
      if (c != '_') chars.insert(c);
    }
  }
  if (chars.empty()) chars.insert('a');
  return monoidcats::make_alphabet(std::string(chars.begin(), chars.end()));
}

monoidcats::Word parse_word(const monoidcats::AlphabetPtr& alphabet,
                            const std::string& text) {
  if (text == "_") return monoidcats::Word::empty(alphabet);
  return monoidcats::Word::parse(alphabet, text);
}

void emit(const std::string& format, const json& machine, const std::string& text) {
  if (format == "json") {
    std::cout << machine.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string current;
  for (char c : text + ",") {
    if (c == ',') {
      if (!current.empty()) out.push_back(std::stoull(current));
      current.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current += c;
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') {
      throw monoidcats::MalformedInput("invalid index list: " + text);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word categories, canonical permutations, and Riguet quotients"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  std::string alphabet_spec;
  app.add_option("--alphabet", alphabet_spec,
                 "alphabet as single-char string (e.g. abc) or JSON file");

  // parikh
  auto* cmd_parikh = app.add_subcommand("parikh", "letter counts of a word");
  std::string parikh_word;
  cmd_parikh->add_option("word", parikh_word)->required();

  // equiv
  auto* cmd_equiv = app.add_subcommand("equiv", "letter-count equivalence of two words");
  std::string equiv_w1, equiv_w2;
  cmd_equiv->add_option("w1", equiv_w1)->required();
  cmd_equiv->add_option("w2", equiv_w2)->required();

  // sigma
  auto* cmd_sigma = app.add_subcommand("sigma", "canonical permutation between equivalent words");
  std::string sigma_w1, sigma_w2;
  cmd_sigma->add_option("w1", sigma_w1)->required();
  cmd_sigma->add_option("w2", sigma_w2)->required();

  // occ
  auto* cmd_occ = app.add_subcommand("occ", "occurrence rank of a position");
  std::string occ_word;
  std::size_t occ_index = 0;
  cmd_occ->add_option("word", occ_word)->required();
  cmd_occ->add_option("index", occ_index)->required();

  // pos
  auto* cmd_pos = app.add_subcommand("pos", "position of the j-th occurrence of a letter");
  std::string pos_word, pos_letter;
  std::size_t pos_j = 0;
  cmd_pos->add_option("word", pos_word)->required();
  cmd_pos->add_option("letter", pos_letter)->required();
  cmd_pos->add_option("j", pos_j)->required();

  // hom
  auto* cmd_hom = app.add_subcommand("hom", "hom-set between two words");
  std::string hom_a, hom_b;
  bool hom_count = false, hom_list = false;
  cmd_hom->add_option("a", hom_a)->required();
  cmd_hom->add_option("b", hom_b)->required();
  cmd_hom->add_flag("--count", hom_count, "print the cardinality");
  cmd_hom->add_flag("--list", hom_list, "enumerate morphisms lexicographically");

  // check-morphism
  auto* cmd_check = app.add_subcommand("check-morphism", "validate an index map as a morphism");
  std::string check_a, check_b, check_map;
  cmd_check->add_option("a", check_a)->required();
  cmd_check->add_option("b", check_b)->required();
  cmd_check->add_option("map", check_map, "comma-separated indices, e.g. 0,1,3")->required();

  // riguet-check
  auto* cmd_riguet = app.add_subcommand("riguet-check", "check the five congruence axioms");
  std::string riguet_cat, riguet_cong;
  cmd_riguet->add_option("category", riguet_cat)->required();
  cmd_riguet->add_option("congruence", riguet_cong)->required();

  // truncate
  auto* cmd_truncate = app.add_subcommand(
      "truncate", "export the length-bounded word category and its congruence");
  std::string trunc_alphabet, trunc_cat_out = "category.json",
              trunc_cong_out = "congruence.json";
  std::size_t trunc_len = 2;
  cmd_truncate->add_option("alphabet", trunc_alphabet)->required();
  cmd_truncate->add_option("max_len", trunc_len)->required();
  cmd_truncate->add_option("--out-category", trunc_cat_out);
  cmd_truncate->add_option("--out-congruence", trunc_cong_out);

  // quotient
  auto* cmd_quot = app.add_subcommand("quotient", "build the quotient category");
  std::string quot_cat, quot_cong, quot_out;
  cmd_quot->add_option("category", quot_cat)->required();
  cmd_quot->add_option("congruence", quot_cong)->required();
  cmd_quot->add_option("--out", quot_out, "write quotient category JSON here");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run seeded property suites");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 42;
  std::size_t verify_trials = 200;
  cmd_verify->add_option("--suite", verify_suite)
      ->check(CLI::IsMember({"laws", "equivalence", "naturality", "all"}));
  cmd_verify->add_option("--seed", verify_seed);
  cmd_verify->add_option("--trials", verify_trials);

  // dot
  auto* cmd_dot = app.add_subcommand("dot", "render a category as a DOT digraph");
  std::string dot_cat, dot_alphabet;
  std::size_t dot_len = 1;
  bool dot_quotient = false;
  cmd_dot->add_option("category", dot_cat, "category JSON file");
  cmd_dot->add_option("--truncate-alphabet", dot_alphabet, "render a fresh truncation instead");
  cmd_dot->add_option("--max-len", dot_len);
  cmd_dot->add_flag("--quotient", dot_quotient, "render the quotient of the truncation");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t cap = enumeration_cap();

    if (*cmd_parikh) {
      auto alphabet = resolve_alphabet(alphabet_spec, {parikh_word});
      monoidcats::ParikhVector p = parikh(parse_word(alphabet, parikh_word));
      std::string text;
      for (std::size_t i = 0; i < alphabet->size(); ++i) {
        if (i > 0) text += " ";
        text += alphabet->letter(i) + ":" + std::to_string(p.counts()[i]);
      }
      emit(format, monoidcats::to_json(p), text);
      return kExitOk;
    }

    if (*cmd_equiv) {
      auto alphabet = resolve_alphabet(alphabet_spec, {equiv_w1, equiv_w2});
      bool result = monoidcats::equiv(parse_word(alphabet, equiv_w1),
                                      parse_word(alphabet, equiv_w2));
      emit(format, json{{"equiv", result}}, result ? "true" : "false");
      return kExitOk;
    }

    if (*cmd_sigma) {
      auto alphabet = resolve_alphabet(alphabet_spec, {sigma_w1, sigma_w2});
      monoidcats::Permutation sigma = monoidcats::canonical_perm(
          parse_word(alphabet, sigma_w1), parse_word(alphabet, sigma_w2));
      json machine = monoidcats::to_json(sigma);
      machine["cycles"] = sigma.cycles();
      emit(format, machine, sigma.cycles() + " " + sigma.one_line());
      return kExitOk;
    }

    if (*cmd_occ) {
      auto alphabet = resolve_alphabet(alphabet_spec, {occ_word});
      std::size_t rank = monoidcats::occ(parse_word(alphabet, occ_word), occ_index);
      emit(format, json{{"occ", rank}}, std::to_string(rank));
      return kExitOk;
    }

    if (*cmd_pos) {
      auto alphabet = resolve_alphabet(alphabet_spec, {pos_word, pos_letter});
      std::size_t index = monoidcats::pos(parse_word(alphabet, pos_word), pos_letter, pos_j);
      emit(format, json{{"pos", index}}, std::to_string(index));
      return kExitOk;
    }

    if (*cmd_hom) {
      auto alphabet = resolve_alphabet(alphabet_spec, {hom_a, hom_b});
      monoidcats::Word a = parse_word(alphabet, hom_a);
      monoidcats::Word b = parse_word(alphabet, hom_b);
      if (hom_list) {
        for (const auto& phi : monoidcats::enumerate_hom(a, b, cap)) {
          if (format == "json") {
            std::cout << monoidcats::to_json(phi)["map"].dump() << "\n";
          } else {
            std::string line = "[";
            for (std::size_t i = 0; i < phi.map().size(); ++i) {
              if (i > 0) line += ",";
              line += std::to_string(phi.map()[i]);
            }
            std::cout << line << "]\n";
          }
        }
      } else {
        std::uint64_t n = monoidcats::hom_cardinality(a, b);
        emit(format, json{{"count", n}}, std::to_string(n));
      }
      return kExitOk;
    }

    if (*cmd_check) {
      auto alphabet = resolve_alphabet(alphabet_spec, {check_a, check_b});
      monoidcats::Word a = parse_word(alphabet, check_a);
      monoidcats::Word b = parse_word(alphabet, check_b);
      try {
        monoidcats::check_morphism(a, b, parse_index_list(check_map));
        emit(format, json{{"valid", true}}, "valid");
        return kExitOk;
      } catch (const monoidcats::NotAMorphism& e) {
        emit(format, json{{"valid", false}, {"index", e.index}, {"error", e.what()}},
             std::string("invalid: ") + e.what());
        return kExitFailure;
      }
    }

    if (*cmd_riguet) {
      monoidcats::FiniteCategory cat =
          monoidcats::category_from_json(monoidcats::load_json_file(riguet_cat));
      monoidcats::RiguetCongruence phi = monoidcats::congruence_from_json(
          monoidcats::load_json_file(riguet_cong), cat);
      monoidcats::AxiomReport report = monoidcats::check_riguet_axioms(cat, phi);
      if (format == "json") {
        std::cout << monoidcats::to_json(report).dump() << "\n";
      } else {
        for (const auto& c : report.conditions) {
          std::cout << "condition " << c.number << " (" << c.detail << "): "
                    << (c.pass ? "PASS" : "FAIL");
          if (!c.pass) {
            std::cout << " witness=[";
            for (std::size_t i = 0; i < c.witness.size(); ++i) {
              if (i > 0) std::cout << ",";
              std::cout << c.witness[i];
            }
            std::cout << "]";
          }
          std::cout << "\n";
        }
      }
      return report.all_pass() ? kExitOk : kExitFailure;
    }

    if (*cmd_truncate) {
      auto alphabet = resolve_alphabet(trunc_alphabet, {});
      auto [cat, phi] = monoidcats::export_truncation(alphabet, trunc_len, cap);
      monoidcats::save_json_file(trunc_cat_out, monoidcats::to_json(cat));
      monoidcats::save_json_file(trunc_cong_out, monoidcats::to_json(phi));
      emit(format,
           json{{"objects", cat.objects().size()},
                {"morphisms", cat.morphisms().size()},
                {"category", trunc_cat_out},
                {"congruence", trunc_cong_out}},
           "wrote " + trunc_cat_out + " (" + std::to_string(cat.objects().size()) +
               " objects, " + std::to_string(cat.morphisms().size()) +
               " morphisms) and " + trunc_cong_out);
      return kExitOk;
    }

    if (*cmd_quot) {
      monoidcats::FiniteCategory cat =
          monoidcats::category_from_json(monoidcats::load_json_file(quot_cat));
      monoidcats::RiguetCongruence phi = monoidcats::congruence_from_json(
          monoidcats::load_json_file(quot_cong), cat);
      monoidcats::AxiomReport report = monoidcats::check_riguet_axioms(cat, phi);
      if (!report.all_pass()) {
        if (format == "json") {
          std::cout << monoidcats::to_json(report).dump() << "\n";
        } else {
          std::cout << "axioms fail; quotient refused\n";
        }
        return kExitFailure;
      }
      monoidcats::QuotientCategory q = monoidcats::quotient(cat, phi);
      json machine = monoidcats::to_json(q.cat);
      machine["object_map"] = q.object_map;
      machine["morphism_map"] = q.morphism_map;
      if (!quot_out.empty()) monoidcats::save_json_file(quot_out, machine);
      emit(format, machine,
           "quotient: " + std::to_string(q.cat.objects().size()) + " objects, " +
               std::to_string(q.cat.morphisms().size()) + " morphisms" +
               (quot_out.empty() ? "" : " -> " + quot_out));
      return kExitOk;
    }

    if (*cmd_verify) {
      monoidcats::verify::Options options{verify_seed, verify_trials};
      monoidcats::verify::Summary summary =
          monoidcats::verify::run_suite(verify_suite, options);
      std::cout << summary.output;
      return summary.pass ? kExitOk : kExitFailure;
    }

    if (*cmd_dot) {
      monoidcats::FiniteCategory cat;
      if (!dot_alphabet.empty()) {
        auto alphabet = resolve_alphabet(dot_alphabet, {});
        auto [trunc_cat, phi] = monoidcats::export_truncation(alphabet, dot_len, cap);
        if (dot_quotient) {
          cat = monoidcats::quotient(trunc_cat, phi).cat;
        } else {
          cat = std::move(trunc_cat);
        }
      } else if (!dot_cat.empty()) {
        cat = monoidcats::category_from_json(monoidcats::load_json_file(dot_cat));
      } else {
        throw monoidcats::MalformedInput(
            "dot needs a category file or --truncate-alphabet");
      }
      std::cout << monoidcats::to_dot(cat);
      return kExitOk;
    }
  } catch (const monoidcats::CapExceeded& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return kExitCap;
  } catch (const monoidcats::TooLarge& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return kExitCap;
  } catch (const monoidcats::Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Unhandled"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  }

  return kExitOk;
}
