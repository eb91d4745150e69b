/*
 * Copyright 2026 The blowup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blowup/verify.hpp"

namespace py = pybind11;
using namespace blowup;

namespace {

Budget make_budget(std::uint64_t pairs, std::uint64_t terms) {
  Budget b = Budget::from_environment();
  if (pairs) b.max_pairs = pairs;
  if (terms) b.max_terms = terms;
  return b;
}

std::string verify_json(const std::string& instance, const std::string& checks, std::uint64_t pairs,
                        std::uint64_t terms, const std::string& tier, bool timings) {
  auto p = AlternatingPresentation::from_json(instance);
  VerifyOptions options;
  options.checks = parse_check_selection(checks);
  options.budget = make_budget(pairs, terms);
  py::gil_scoped_release release;
  return verify_instance(p, options, tier).to_json(timings);
}

std::vector<std::string> groebner_strings(const std::vector<std::string>& generators,
                                          const std::vector<std::string>& variables, std::uint32_t characteristic,
                                          const std::string& order) {
  auto ring = Ring::make(characteristic, {{"v", variables, 1, 0}});
  OrderPtr o;
  if (order == "grevlex") {
    o = ring->grevlex();
  } else if (order == "lex") {
    o = MonomialOrder::lex(variables.size());
  } else {
    throw ValidationError("unknown order \"" + order + "\"");
  }
  Ideal ideal = Ideal::parse(ring, generators);
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner_basis(o)) out.push_back(g.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_blowup, m) {
  m.doc() = "Exact verification of Rees and fiber ideals over GF(p)";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateInstance>(m, "DegenerateInstance", PyExc_RuntimeError);
  py::register_exception<Timeout>(m, "Timeout", PyExc_TimeoutError);

  m.attr("DEFAULT_CHARACTERISTIC") = kDefaultCharacteristic;
  m.attr("CHECKS") = all_check_names();

  m.def(
      "generate",
      [](std::size_t d, std::size_t n, std::uint32_t characteristic, std::uint64_t seed) {
        return random_presentation(d, n, characteristic, seed).to_json();
      },
      py::arg("d"), py::arg("n"), py::arg("char") = kDefaultCharacteristic, py::arg("seed") = 0,
      "Instance JSON for a seeded generic presentation.");
  m.def("verify_json", &verify_json, py::arg("instance"), py::arg("checks") = "", py::arg("budget_pairs") = 0,
        py::arg("budget_terms") = 0, py::arg("tier") = "required", py::arg("timings") = false,
        "Runs the selected checks on an instance and returns the report JSON.");
  m.def("expected_multiplicity", &expected_multiplicity, py::arg("d"), py::arg("n"));
  m.def("monomial_count", &monomial_count_restatement, py::arg("d"), py::arg("n"));
  m.def(
      "closed_form_hilbert",
      [](std::size_t d, std::size_t n, int max_degree) {
        auto s = closed_form_hilbert(d, n, max_degree);
        std::vector<std::int64_t> out;
        for (int k = 0; k <= max_degree; ++k) out.push_back(s.at(k));
        return out;
      },
      py::arg("d"), py::arg("n"), py::arg("max_degree"),
      "Hilbert function of the fiber ring in degrees 0..max_degree from the closed form.");
  m.def("groebner_basis", &groebner_strings, py::arg("generators"), py::arg("variables"),
        py::arg("char") = kDefaultCharacteristic, py::arg("order") = "grevlex",
        "Reduced Groebner basis, as strings, of polynomials given as strings.");
}
