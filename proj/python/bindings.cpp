#include "cotcoord/bernoulli.hpp"
#include "cotcoord/characters.hpp"
#include "cotcoord/cli.hpp"
#include "cotcoord/combinatorics.hpp"
#include "cotcoord/coordinates.hpp"
#include "cotcoord/cotangent.hpp"
#include "cotcoord/serialize.hpp"
#include "cotcoord/series.hpp"
#include "cotcoord/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cotcoord;

namespace {

py::object to_fraction(const Rat& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

Rat from_python(const py::handle& v) {
  if (py::isinstance<py::int_>(v) || py::isinstance<py::str>(v)) return parse_rat(py::str(v).cast<std::string>());
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  if (py::isinstance(v, fraction)) {
    auto f = py::reinterpret_borrow<py::object>(v);
    return parse_rat(py::str(f.attr("numerator")).cast<std::string>() + "/" +
                     py::str(f.attr("denominator")).cast<std::string>());
  }
  throw py::type_error("expected int, str or fractions.Fraction");
}

std::vector<py::object> coeffs_as_fractions(const CycElem& a) {
  std::vector<py::object> out;
  for (const auto& c : a.coeffs()) out.push_back(to_fraction(c));
  return out;
}

std::string repr(const CycElem& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character coordinates of cotangent values in cyclotomic fields";
  m.attr("__version__") = std::string(version());

  py::class_<CycElem>(m, "CycElem")
      .def_static("zero", &CycElem::zero, py::arg("order"))
      .def_static("one", &CycElem::one, py::arg("order"))
      .def_static(
          "rational", [](long order, const py::object& v) { return CycElem::rational(order, from_python(v)); },
          py::arg("order"), py::arg("value"))
      .def_static("root_of_unity", &CycElem::root_of_unity, py::arg("order"), py::arg("k") = 1)
      .def_static(
          "from_coeffs",
          [](long order, const py::list& coeffs) {
            std::vector<Rat> v;
            for (auto c : coeffs) v.push_back(from_python(c));
            return CycElem::from_coeffs(order, std::move(v));
          },
          py::arg("order"), py::arg("coeffs"))
      .def_static(
          "from_json", [](const std::string& s) { return cycelem_from_json(nlohmann::json::parse(s)); }, py::arg("text"))
      .def_property_readonly("order", &CycElem::order)
      .def_property_readonly("degree", &CycElem::degree)
      .def_property_readonly("coeffs", &coeffs_as_fractions)
      .def("is_zero", &CycElem::is_zero)
      .def("as_rational",
           [](const CycElem& a) -> py::object {
             auto q = a.as_rational();
             return q ? to_fraction(*q) : py::none();
           })
      .def("inverse", [](const CycElem& a) { return inverse(a); })
      .def("galois", [](const CycElem& a, long k) { return galois(a, k); }, py::arg("k"))
      .def("conjugate", [](const CycElem& a) { return conjugate(a); })
      .def("embed", [](const CycElem& a, long target) { return embed(a, target); }, py::arg("order"))
      .def(
          "__complex__", [](const CycElem& a) { return std::complex<double>(complex_eval(a)); })
      .def("to_json", [](const CycElem& a) { return to_json(a).dump(); })
      .def("__add__", [](const CycElem& a, const CycElem& b) { return add(a, b); })
      .def("__sub__", [](const CycElem& a, const CycElem& b) { return sub(a, b); })
      .def("__mul__", [](const CycElem& a, const CycElem& b) { return mul(a, b); })
      .def("__neg__", [](const CycElem& a) { return neg(a); })
      .def("__pow__", [](const CycElem& a, unsigned e) { return pow(a, e); })
      .def("__eq__", [](const CycElem& a, const CycElem& b) { return a == b; })
      .def("__hash__", [](const CycElem& a) { return py::hash(py::str(to_json(a).dump())); })
      .def("__repr__", &repr)
      .def("__str__", &repr);

  py::class_<DirichletCharacter>(m, "Character")
      .def_property_readonly("modulus", &DirichletCharacter::modulus)
      .def_property_readonly("index", &DirichletCharacter::index)
      .def_property_readonly("exponents", &DirichletCharacter::exponents)
      .def_property_readonly("order", &DirichletCharacter::order)
      .def_property_readonly("parity", [](const DirichletCharacter& c) { return parity(c); })
      .def_property_readonly("conductor", [](const DirichletCharacter& c) { return conductor(c); })
      .def("is_primitive", [](const DirichletCharacter& c) { return is_primitive(c); })
      .def("primitive_part", [](const DirichletCharacter& c) { return primitive_part(c); })
      .def("conj", &DirichletCharacter::conj)
      .def("__call__", [](const DirichletCharacter& c, long k) { return eval(c, k); }, py::arg("k"))
      .def("__eq__", [](const DirichletCharacter& a, const DirichletCharacter& b) { return a == b; })
      .def("__repr__", [](const DirichletCharacter& c) {
        return "Character(modulus=" + std::to_string(c.modulus()) + ", index=" + std::to_string(c.index()) + ")";
      });

  m.def("cyclotomic_polynomial", [](long n) {
    std::vector<py::int_> out;
    for (const auto& c : cyclotomic_polynomial(n)) out.push_back(py::int_(py::str(c.get_str())));
    return out;
  });
  m.def("characters", &enumerate, py::arg("n"));
  m.def("character", &character, py::arg("n"), py::arg("index"));
  m.def("gauss_sum", &gauss_sum, py::arg("chi"));

  m.def("bernoulli_number", [](long k) { return to_fraction(bernoulli_number(k)); }, py::arg("m"));
  m.def("generalized_bernoulli", &generalized_bernoulli, py::arg("r"), py::arg("chi"));
  m.def("stirling_first_unsigned", [](long k, long j) { return py::int_(py::str(stirling_first_unsigned(k, j).get_str())); },
        py::arg("k"), py::arg("j"));
  m.def("coeff_c", [](long r, long j) { return to_fraction(coeff_c(r, j)); }, py::arg("r"), py::arg("j"));
  m.def("coeff_d", [](long r, long j) { return to_fraction(coeff_d(r, j)); }, py::arg("r"), py::arg("j"));

  m.def("icot_value", &icot_value, py::arg("n"), py::arg("k") = 1);
  m.def("icot_power", &icot_power, py::arg("r"), py::arg("n"));
  m.def("cotangent_number", &cotangent_number, py::arg("j"), py::arg("n"));

  m.def("coord_definitional", &coord_definitional, py::arg("chi"), py::arg("a"));
  m.def("coord_cotangent_closed", &coord_cotangent_closed, py::arg("chi"), py::arg("j"));
  m.def("coord_power_closed", &coord_power_closed, py::arg("chi"), py::arg("r"));
  m.def("coord_power_eq42", &coord_power_eq42, py::arg("chi"), py::arg("r"));
  m.def("coord_one", &coord_one, py::arg("chi"));
  m.def("all_coordinates", &all_coordinates, py::arg("a"));
  m.def(
      "reconstruct", [](const std::vector<CycElem>& coords, long n) { return reconstruct(coords, n); },
      py::arg("coords"), py::arg("n"));
  m.def(
      "direct_sum_float",
      [](const DirichletCharacter& chi, long r, long n) { return std::complex<double>(direct_sum_float(chi, r, n)); },
      py::arg("chi"), py::arg("r"), py::arg("n"));

  m.def("verify_proposition_1", &verify_proposition_1, py::arg("r"), py::arg("order"));
  m.def("verify_stirling_identity", &verify_stirling_identity, py::arg("k"), py::arg("order"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, const py::kwargs& options) {
        SuiteConfig config;
        for (auto [key, value] : options) config.set(py::str(key).cast<std::string>(), py::str(value).cast<std::string>());
        SuiteResult result;
        {
          py::gil_scoped_release release;
          result = run_suite(name, config);
        }
        return json_to_python(to_json(result));
      },
      py::arg("name"));

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
