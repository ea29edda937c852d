// Python entry points. Arguments and results cross the boundary as JSON text;
// the pure-python wrapper in weylcomp/__init__.py converts to and from objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylcomp/companion.hpp"
#include "weylcomp/ff_oracle.hpp"
#include "weylcomp/good_form.hpp"
#include "weylcomp/scenario.hpp"
#include "weylcomp/serialize.hpp"
#include "weylcomp/steinberg.hpp"

namespace py = pybind11;
using namespace weylcomp;

namespace {

json arg(const std::string& text) { return json::parse(text); }

std::string coset_info(const std::string& w, const std::string& blocks) {
  const MultiPerm m = multiperm_from_json(arg(w));
  const ParabolicSpec P = parabolic_from_json(arg(blocks));
  const auto d = decompose(m, P);
  return json{{"coset", CosetRep(m, P)}, {"min_rep", d.min_part}, {"levi_part", d.levi_part}, {"lg_P", lg_P(m, P)}}
      .dump();
}

std::string cosets(const std::string& blocks) {
  return json(all_cosets(parabolic_from_json(arg(blocks)))).dump();
}

std::string dot_action(const std::string& w, const std::string& lambda) {
  return json(dot_act(multiperm_from_json(arg(w)), weight_from_json(arg(lambda)))).dump();
}

bool component(const std::string& w, const std::string& blocks, const std::string& q_blocks, const std::string& h) {
  const CosetRep c(multiperm_from_json(arg(w)), parabolic_from_json(arg(blocks)));
  return component_in_ZQP(c, parabolic_from_json(arg(q_blocks)), weight_from_json(arg(h)));
}

std::string induction_step(const std::string& w, const std::string& blocks, const std::string& h) {
  const CosetRep c(multiperm_from_json(arg(w)), parabolic_from_json(arg(blocks)));
  return json(find_induction_step(c, weight_from_json(arg(h)))).dump();
}

std::string companion(const std::string& scenario) {
  const Scenario s = parse_scenario(scenario);
  return json(companion_set(s.refinement, s.h, s.w_R)).dump();
}

std::string walk(const std::string& scenario) {
  const Scenario s = parse_scenario(scenario);
  return json(certify_walk(s.w_R, s.h)).dump();
}

std::string ff_verify(const std::string& suite, int n, int p, unsigned threads) {
  std::vector<std::string> skipped;
  const auto results = run_suite(suite, n, p, threads, &skipped);
  const bool pass = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
  return json{{"suite", suite}, {"n", n}, {"p", p}, {"pass", pass}, {"checks", results}, {"skipped", skipped}}.dump();
}

// Entries are integers or "a/b" strings; the result uses "a/b" strings.
std::string good_form(const std::string& matrix) {
  DenseMatrix<Rational> v;
  for (const auto& row : arg(matrix)) {
    v.emplace_back();
    for (const auto& x : row) v.back().push_back(rational_from_json(x));
  }
  if (v.empty()) throw std::invalid_argument("good_form: empty matrix");
  const auto gf = good_form_conjugate(v, Rational(1));
  auto dump = [](const DenseMatrix<Rational>& m) {
    json out = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& x : row) r.push_back(rational_to_string(x));
      out.push_back(r);
    }
    return out;
  };
  return json{{"b", dump(gf.b)}, {"result", dump(gf.result)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_weylcomp, m) {
  m.doc() = "JSON-level bindings; use the weylcomp package instead";

  py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);

  m.def("coset_info", &coset_info, py::arg("w"), py::arg("blocks"));
  m.def("cosets", &cosets, py::arg("blocks"));
  m.def("dot_act", &dot_action, py::arg("w"), py::arg("weight"));
  m.def("component_in_zqp", &component, py::arg("w"), py::arg("blocks"), py::arg("q_blocks"), py::arg("h"));
  m.def("find_induction_step", &induction_step, py::arg("w"), py::arg("blocks"), py::arg("h"));
  m.def("companion_set", &companion, py::arg("scenario"));
  m.def("certify_walk", &walk, py::arg("scenario"));
  m.def("ff_verify", &ff_verify, py::arg("suite"), py::arg("n"), py::arg("p"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("good_form", &good_form, py::arg("matrix"));
  m.def("flag_count", [](int n, int p) { return enumerate_flags(n, p).size(); }, py::arg("n"), py::arg("p"));
}
