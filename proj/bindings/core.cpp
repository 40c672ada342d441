// Python bindings for the main operations: words and counts, canonical
// permutations, word-category homs, the letter-count quotient, truncated
// tables, and the seeded verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoidcats/cat_c.hpp"
#include "monoidcats/dot.hpp"
#include "monoidcats/perm.hpp"
#include "monoidcats/quotient_q.hpp"
#include "monoidcats/riguet.hpp"
#include "monoidcats/verify.hpp"
#include "monoidcats/words.hpp"

namespace py = pybind11;
using namespace monoidcats;

namespace {

AlphabetPtr alphabet_of(const std::string& chars) { return make_alphabet(chars); }

Word word_of(const std::string& alphabet, const std::string& compact) {
  auto a = make_alphabet(alphabet);
  if (compact == "_") return Word::empty(a);
  return Word::parse(a, compact);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "words, canonical permutations, and letter-count quotients";

  py::register_exception<Error>(m, "DomainError");

  py::class_<Word>(m, "Word")
      .def("__str__", &Word::str)
      .def("__len__", &Word::length)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def_property_readonly("entries",
                             [](const Word& w) { return w.entries(); });

  py::class_<Permutation>(m, "Permutation")
      .def_property_readonly("map", &Permutation::map)
      .def("cycles", &Permutation::cycles)
      .def("one_line", &Permutation::one_line)
      .def("__call__", &Permutation::apply);

  py::class_<CMorphism>(m, "Morphism")
      .def_property_readonly("map", &CMorphism::map)
      .def_property_readonly("dom", &CMorphism::dom)
      .def_property_readonly("cod", &CMorphism::cod)
      .def("__call__", [](const CMorphism& phi, std::size_t i) {
        if (i >= phi.map().size()) throw IndexOutOfRange("index out of range");
        return phi(i);
      });

  m.def("word", &word_of, py::arg("alphabet"), py::arg("entries"),
        "Word from single-char alphabet and compact entry string ('_' = empty)");

  m.def("parikh", [](const Word& w) {
    std::map<std::string, std::uint64_t> out;
    ParikhVector p = parikh(w);
    for (std::size_t i = 0; i < w.alphabet().size(); ++i) {
      out[w.alphabet().letter(i)] = p.counts()[i];
    }
    return out;
  });

  m.def("equiv", [](const Word& u, const Word& v) { return equiv(u, v); });
  m.def("concat", [](const Word& u, const Word& v) { return concat(u, v); });
  m.def("occ", [](const Word& w, std::size_t i) { return occ(w, i); });
  m.def("pos", [](const Word& w, const std::string& x, std::size_t j) {
    return pos(w, x, j);
  });
  m.def("sigma", &canonical_perm, py::arg("u"), py::arg("v"),
        "Canonical permutation s with u = v o s");

  m.def("morphism", [](const Word& a, const Word& b,
                       const std::vector<std::size_t>& map) {
    return check_morphism(a, b, map);
  });
  m.def("compose",
        [](const CMorphism& psi, const CMorphism& phi) { return compose(psi, phi); });
  m.def("hom_cardinality", &hom_cardinality);
  m.def("enumerate_hom", &enumerate_hom, py::arg("a"), py::arg("b"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("is_iso", &is_iso);

  m.def("canonical_class_word", [](const Word& w) {
    return parikh_to_canonical_word(parikh(w));
  });
  m.def("q_morphism_rep",
        [](const CMorphism& phi) { return q_morphism(phi).rep(); },
        "Representative of the class of phi between canonical words");
  m.def("fiber_map", [](const CMorphism& phi, const std::string& letter) {
    return fiber_map(phi, letter);
  });

  m.def("truncation_riguet_report", [](const std::string& alphabet,
                                       std::size_t max_len) {
    auto [cat, phi] = export_truncation(alphabet_of(alphabet), max_len);
    AxiomReport report = check_riguet_axioms(cat, phi);
    std::map<std::string, std::size_t> out;
    out["objects"] = cat.objects().size();
    out["morphisms"] = cat.morphisms().size();
    out["axioms_pass"] = report.all_pass() ? 1 : 0;
    if (report.all_pass()) {
      QuotientCategory q = quotient(cat, phi);
      out["quotient_objects"] = q.cat.objects().size();
      out["quotient_morphisms"] = q.cat.morphisms().size();
    }
    return out;
  });

  m.def("truncation_dot", [](const std::string& alphabet, std::size_t max_len,
                             bool take_quotient) {
    auto [cat, phi] = export_truncation(alphabet_of(alphabet), max_len);
    if (take_quotient) return to_dot(quotient(cat, phi).cat);
    return to_dot(cat);
  });

  m.def("verify", [](const std::string& suite, std::uint64_t seed,
                     std::size_t trials) {
    verify::Summary s = verify::run_suite(suite, verify::Options{seed, trials});
    return py::make_tuple(s.pass, s.checks, s.failures, s.output);
  },
        py::arg("suite") = "all", py::arg("seed") = 42, py::arg("trials") = 200);
}
