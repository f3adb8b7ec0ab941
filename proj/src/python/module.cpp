#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sij/interval_sijections.hpp"
#include "sij/memo.hpp"
#include "sij/mt_sgt.hpp"
#include "sij/oracles.hpp"

namespace py = pybind11;
using namespace sij;

namespace {

// Counts are unbounded; hand them over as Python ints.
py::object to_py(const Count& c) { return py::module_::import("builtins").attr("int")(c.str()); }

py::tuple to_py(const SignedCounts& c) { return py::make_tuple(to_py(c.pos), to_py(c.neg)); }

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed sets and sijections for monotone triangles and Gelfand-Tsetlin patterns";

  py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);

  py::class_<Sijection>(m, "Sijection")
      .def_property_readonly("name", &Sijection::name)
      .def_property_readonly("domain_counts", [](const Sijection& s) { return to_py(s.domain().counts()); })
      .def_property_readonly("codomain_counts", [](const Sijection& s) { return to_py(s.codomain().counts()); })
      .def(
          "verify",
          [](const Sijection& s, unsigned jobs, std::size_t max_failures, bool check_normal) {
            VerificationReport rep;
            {
              py::gil_scoped_release unlocked;
              rep = verify(s, {jobs, max_failures, check_normal});
            }
            return json_to_py(rep.to_json());
          },
          py::arg("jobs") = 1, py::arg("max_failures") = 10, py::arg("check_normal") = false)
      .def("__repr__", [](const Sijection& s) { return "<Sijection " + s.name() + ">"; });

  m.def("mt_counts", [](const std::vector<Int>& k) { return to_py(mt_counts(k)); }, py::arg("k"));
  m.def("sgt_counts", [](const std::vector<Int>& k) { return to_py(sgt_counts(k)); }, py::arg("k"));
  m.def("gt_counts", [](const std::vector<Int>& k) { return to_py(gt_counts(k)); }, py::arg("k"));
  m.def("gt_polynomial", [](const std::vector<Int>& k) { return to_py(gt_polynomial(k)); }, py::arg("k"));
  m.def(
      "operator_formula",
      [](const std::vector<Int>& k, int cap, bool reference, unsigned jobs) {
        return to_py(operator_formula(k, {cap, reference, jobs}));
      },
      py::arg("k"), py::arg("cap") = 7, py::arg("reference") = false, py::arg("jobs") = 1);
  m.def("asm_formula", [](int n) { return to_py(asm_formula(n)); }, py::arg("n"));

  m.def("asm_violations", &asm_violations, py::arg("matrix"));
  m.def("asm_to_mt", &asm_to_mt, py::arg("matrix"));
  m.def("mt_to_asm", &mt_to_asm, py::arg("rows"));
  m.def("all_asms", &all_asms, py::arg("n"));

  m.def("alpha", &alpha, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("alpha_split", &alpha_split, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("to_empty", &to_empty, py::arg("a"), py::arg("b"));
  m.def("beta", &beta, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("gamma_box", &gamma_box, py::arg("k"), py::arg("x"));
  m.def("rho", &rho, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("pi", &pi, py::arg("k"), py::arg("i"));
  m.def("sigma", &sigma, py::arg("a"), py::arg("b"), py::arg("i"));
  m.def("tau", &tau, py::arg("k"), py::arg("x"));
  m.def("Xi", &Xi, py::arg("k"));
  m.def("Psi", &Psi, py::arg("n"), py::arg("i"));
  m.def("Lambda", &Lambda, py::arg("n"), py::arg("i"));
  m.def("Phi", &Phi, py::arg("k"), py::arg("x"));
  m.def("Gamma", &Gamma, py::arg("k"), py::arg("x"));

  m.def(
      "gamma_table",
      [](const std::vector<Int>& k, Int x) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : gamma_pairs(Gamma(k, x)))
          out.emplace_back(gamma_element_text(k, p.first), gamma_element_text(k, p.second));
        return out;
      },
      py::arg("k"), py::arg("x"));

  m.def("clear_memo_tables", &clear_memo_tables);
}
