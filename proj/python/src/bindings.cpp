#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sbcert/certificate.hpp"
#include "sbcert/error.hpp"

namespace py = pybind11;
using namespace sbcert;

namespace {

// Rationals cross the boundary as decimal strings such as "-3/4".
Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw py::value_error("not a rational: " + s);
  q.canonicalize();
  return q;
}

std::vector<std::string> to_strings(const FieldElem& x) {
  std::vector<std::string> out;
  for (const Rational& q : x.coords()) out.push_back(to_string(q));
  return out;
}

FieldElem from_strings(const CycloField& f, const std::vector<std::string>& coords) {
  std::vector<Rational> qs;
  for (const auto& s : coords) qs.push_back(parse_rational(s));
  return f.from_coords(std::move(qs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cyclotomic fields, cyclic cubic algebras and certificates";

  // The module attribute keeps the type alive for the translator.
  static PyObject* error_type = py::exception<Error>(m, "Error", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("IMPORTED_LEMMA") = std::string(kImportedLemma);
  m.attr("PHI_CONVENTION") = kPhiConvention;

  m.def("is_prime", &is_prime);
  m.def("cubes_mod_p", &cubes_mod_p, py::arg("p"));
  m.def("is_cube_mod_p", &is_cube_mod_p, py::arg("a"), py::arg("p"));
  m.def("choose_a", &choose_a, py::arg("p"));

  py::class_<CycloField>(m, "Field")
      .def(py::init(&CycloField::make), py::arg("p"))
      .def_property_readonly("p", &CycloField::p)
      .def_property_readonly("d", &CycloField::d)
      .def_property_readonly("k", &CycloField::k)
      .def_property_readonly("degree", &CycloField::degree)
      .def("zero", &CycloField::zero)
      .def("one", &CycloField::one)
      .def("zeta", &CycloField::zeta)
      .def("zeta_pow", &CycloField::zeta_pow, py::arg("e"))
      .def("rational", [](const CycloField& f, const std::string& q) { return f.from_rational(parse_rational(q)); })
      .def("element", &from_strings, py::arg("coords"))
      .def("gaussian_periods", &CycloField::gaussian_periods);

  py::class_<FieldElem>(m, "FieldElem")
      .def_property_readonly("coords", &to_strings)
      .def("is_zero", &FieldElem::is_zero)
      .def("in_K", [](const FieldElem& x) { return is_in_K(x); })
      .def("inverse", [](const FieldElem& x) { return inverse(x); })
      .def("apply_aut", [](const FieldElem& x, std::int64_t t) { return apply_aut(t, x); }, py::arg("t"))
      .def("sigma", [](const FieldElem& x) { return sigma(x); })
      .def("relative_norm", [](const FieldElem& x) { return relative_norm(x); })
      .def("absolute_norm", [](const FieldElem& x) { return to_string(absolute_norm(x)); })
      .def("__add__", [](const FieldElem& x, const FieldElem& y) { return x + y; })
      .def("__sub__", [](const FieldElem& x, const FieldElem& y) { return x - y; })
      .def("__mul__", [](const FieldElem& x, const FieldElem& y) { return x * y; })
      .def("__truediv__", [](const FieldElem& x, const FieldElem& y) { return x / y; })
      .def("__neg__", [](const FieldElem& x) { return -x; })
      .def("__eq__", [](const FieldElem& x, const FieldElem& y) { return x == y; })
      .def("__repr__", [](const FieldElem& x) {
        std::string s = "FieldElem(p=" + std::to_string(x.field().p()) + ", [";
        const auto c = to_strings(x);
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i];
        return s + "])";
      });

  py::class_<CyclicAlgebra>(m, "Algebra")
      .def(py::init([](const CycloField& f, const std::string& a) { return CyclicAlgebra(f, parse_rational(a)); }),
           py::arg("field"), py::arg("a"))
      .def_property_readonly("field", &CyclicAlgebra::field)
      .def_property_readonly("a", [](const CyclicAlgebra& alg) { return to_string(alg.a()); })
      .def("obstruction_holds", &CyclicAlgebra::obstruction_holds)
      .def("one", &CyclicAlgebra::one)
      .def("zero", &CyclicAlgebra::zero)
      .def("alpha", &CyclicAlgebra::alpha)
      .def("embed", &CyclicAlgebra::embed_L, py::arg("lam"))
      .def("element", &CyclicAlgebra::make, py::arg("x0"), py::arg("x1"), py::arg("x2"));

  py::class_<AlgebraElem>(m, "AlgebraElem")
      .def_property_readonly("components",
                             [](const AlgebraElem& x) { return std::vector<FieldElem>{x[0], x[1], x[2]}; })
      .def("is_zero", &AlgebraElem::is_zero)
      .def("reduced_norm", [](const AlgebraElem& x) { return reduced_norm(x); })
      .def("inverse", [](const AlgebraElem& x) { return inverse(x); })
      .def("__pow__", [](const AlgebraElem& x, std::int64_t n) { return power(x, n); })
      .def("__add__", [](const AlgebraElem& x, const AlgebraElem& y) { return x + y; })
      .def("__sub__", [](const AlgebraElem& x, const AlgebraElem& y) { return x - y; })
      .def("__mul__", [](const AlgebraElem& x, const AlgebraElem& y) { return x * y; })
      .def("__eq__", [](const AlgebraElem& x, const AlgebraElem& y) { return x == y; })
      .def("same_class", [](const AlgebraElem& x, const AlgebraElem& y) { return class_eq(x, y); });

  m.def(
      "run_pipeline",
      [](std::int64_t p, std::optional<std::int64_t> a, std::uint64_t seed, std::uint64_t trials,
         std::optional<std::int64_t> norm_search_bound, bool timings) {
        PipelineOptions o;
        o.a = a;
        o.seed = seed;
        o.trials = trials;
        o.norm_search_bound = norm_search_bound;
        Certificate cert;
        {
          py::gil_scoped_release release;
          cert = run_pipeline(p, o);
        }
        return to_json(cert, timings);
      },
      py::arg("p"), py::arg("a") = py::none(), py::arg("seed") = 0, py::arg("trials") = 100,
      py::arg("norm_search_bound") = py::none(), py::arg("timings") = false,
      "Runs the full certification for prime p and returns the certificate as canonical JSON text.");
}
