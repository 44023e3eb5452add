// Python bindings. Scalars cross as PadicInt objects; structured records
// (roots, W, local data, canonical series) cross as JSON text in the same
// format the command-line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "deltaop/delta_calc.hpp"
#include "deltaop/io.hpp"
#include "deltaop/numtheory.hpp"
#include "deltaop/repr.hpp"
#include "deltaop/roots.hpp"

namespace py = pybind11;
using namespace deltaop;

namespace {

mpz_class to_mpz(const py::int_& z) { return mpz_class(py::str(z).cast<std::string>()); }

py::int_ to_py(const mpz_class& z) {
  return py::int_(py::module_::import("builtins").attr("int")(z.get_str()));
}

std::string dump(const Json& j) { return j.dump(); }

py::tuple point(const PointValue& v) { return py::make_tuple(v.value, v.tail_valuation_bound); }

}  // namespace

PYBIND11_MODULE(_deltaop, m) {
  m.doc() = "Fermat-quotient calculus over truncated p-adic integers";

  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<PadicInt>(m, "PadicInt")
      .def(py::init([](Prime p, int N, const py::int_& v) {
             return PadicInt::from_integer(p, N, to_mpz(v));
           }),
           py::arg("p"), py::arg("N"), py::arg("value"))
      .def_property_readonly("p", &PadicInt::prime)
      .def_property_readonly("N", &PadicInt::precision)
      .def_property_readonly("value", [](const PadicInt& x) { return to_py(x.value()); })
      .def_property_readonly("signed_value",
                             [](const PadicInt& x) { return to_py(x.signed_value()); })
      .def("is_zero", &PadicInt::is_zero)
      .def("is_unit", &PadicInt::is_unit)
      .def("reduced", &PadicInt::reduced, py::arg("N"))
      .def("congruent", &PadicInt::congruent, py::arg("other"), py::arg("digits"))
      .def("valuation",
           [](const PadicInt& x) {
             const Valuation v = valuation(x);
             return py::make_tuple(v.value, v.at_least);
           },
           "(v, at_least): at_least is true when the value is zero at this precision")
      .def("__neg__", [](const PadicInt& x) { return -x; })
      .def("__add__", [](const PadicInt& x, const PadicInt& y) { return x + y; })
      .def("__sub__", [](const PadicInt& x, const PadicInt& y) { return x - y; })
      .def("__mul__", [](const PadicInt& x, const PadicInt& y) { return x * y; })
      .def("__pow__", [](const PadicInt& x, unsigned long e) { return x.pow(e); })
      .def("__eq__", [](const PadicInt& x, const PadicInt& y) { return x == y; })
      .def("__hash__",
           [](const PadicInt& x) {
             return py::hash(py::make_tuple(x.prime(), x.precision(), x.value().get_str()));
           })
      .def("__str__", [](const PadicInt& x) { return to_string(x); })
      .def("__repr__", [](const PadicInt& x) {
        std::ostringstream os;
        os << "PadicInt(p=" << x.prime() << ", N=" << x.precision() << ", value=" << x.value()
           << ")";
        return os.str();
      });

  m.def("delta", &delta, py::arg("x"), "Fermat quotient (x - x^p)/p; loses one digit.");
  m.def("delta_iter", &delta_iter, py::arg("x"), py::arg("k"));
  m.def("hensel_root", &hensel_root, py::arg("p"), py::arg("N"), py::arg("a"), py::arg("j"),
        "Root t = j mod p of t^p - t + p*a.");
  m.def("digit_coords", &digit_coords, py::arg("a"), py::arg("m"));

  m.def(
      "delta_expansion",
      [](const PadicInt& a, int n, int k, std::size_t cap) {
        const DeltaExpansion e = delta_expansion(a, n, k, cap);
        Json j;
        j["poly"] = to_json(e.poly);
        j["tail_valuation_bound"] =
            e.tail_valuation_bound ? Json(*e.tail_valuation_bound) : Json(nullptr);
        j["bounds"] = to_json(check_le1_bounds(e));
        return dump(j);
      },
      py::arg("a"), py::arg("n"), py::arg("k"), py::arg("cap"));

  m.def(
      "compute_cm", [](Prime p, int level, int N) { return dump(to_json(compute_Cm(p, level, N))); },
      py::arg("p"), py::arg("m"), py::arg("N"));
  m.def(
      "cm_roots", [](Prime p, int level, int N) { return compute_Cm(p, level, N).roots; },
      py::arg("p"), py::arg("m"), py::arg("N"));
  m.def(
      "w_matrix",
      [](Prime p, int level, int N) {
        const WMatrix w = build_W(compute_Cm(p, level, N), IndexOrder(p, level));
        return dump(to_json(w, det_unit_certificate(w)));
      },
      py::arg("p"), py::arg("m"), py::arg("N"));

  m.def(
      "represent",
      [](const std::string& local) {
        return dump(to_json(represent(local_from_json(Json::parse(local)))));
      },
      py::arg("local"));
  m.def(
      "expand",
      [](const std::string& series, int N) {
        return dump(to_json(expand(canonical_from_json(Json::parse(series)), N)));
      },
      py::arg("series"), py::arg("N"));
  m.def(
      "evaluate_canonical",
      [](const std::string& series, const PadicInt& x) {
        return point(evaluate_canonical(canonical_from_json(Json::parse(series)), x));
      },
      py::arg("series"), py::arg("x"));
  m.def(
      "evaluate_local",
      [](const std::string& local, const PadicInt& x) {
        return point(evaluate_local(local_from_json(Json::parse(local)), x));
      },
      py::arg("local"), py::arg("x"));
  m.def(
      "roundtrip",
      [](const std::string& series, int N) {
        const RoundtripReport r = roundtrip_report(canonical_from_json(Json::parse(series)), N);
        return py::make_tuple(r.pass, r.modulus_digits);
      },
      py::arg("series"), py::arg("N"));

  m.def(
      "legendre_oracle", [](const py::int_& a, Prime p) { return legendre_oracle(to_mpz(a), p); },
      py::arg("a"), py::arg("p"));
  m.def(
      "legendre_series",
      [](const PadicInt& a, int N, int terms) {
        return legendre_series_eval(a, {a.prime(), N, terms});
      },
      py::arg("a"), py::arg("N") = 8, py::arg("terms") = 10);
}
