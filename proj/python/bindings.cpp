#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shv/commands.hpp"
#include "shv/straighten.hpp"

namespace py = pybind11;
using namespace shv;
using commands::json;

namespace {

// Documents cross the boundary as JSON text; the Python layer decodes them.
template <class F>
py::tuple wrap(F&& f) {
  commands::Result r;
  try {
    r = f();
  } catch (const json::exception& e) {
    throw document::DocumentError(e.what());
  }
  return py::make_tuple(r.doc.dump(), r.ok, r.diagnostics);
}

json parse(const std::string& text) { return document::parse_text(text); }

std::optional<json> parse_optional(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse(*text);
}

superalgebra::Tag parse_tag(const std::string& algebra) {
  if (algebra == "ramond") return superalgebra::Tag::ramond;
  if (algebra == "ns") return superalgebra::Tag::neveu_schwarz;
  throw commands::UsageError("algebra must be ramond or ns");
}

}  // namespace

PYBIND11_MODULE(_shv, m) {
  m.doc() = "Exact computations in the super Heisenberg-Virasoro algebra";

  py::register_exception<document::DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<commands::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<induced::FuelExhausted>(m, "FuelExhausted", PyExc_RuntimeError);

  m.attr("default_fuel") = induced::kDefaultFuel;

  m.def("bracket", [](const std::string& x, const std::string& y, const std::string& algebra) {
    return wrap([&] { return commands::bracket(parse(x), parse(y), parse_tag(algebra)); });
  }, py::arg("x"), py::arg("y"), py::arg("algebra") = "ramond");

  m.def("conformal_check", [](const std::optional<std::string>& ansatz) {
    return wrap([&] { return commands::conformal_check(parse_optional(ansatz)); });
  }, py::arg("ansatz") = py::none());
  m.def("conformal_classify", [](long degree, bool c_nonzero) {
    return wrap([&] { return commands::conformal_classify(degree, c_nonzero); });
  }, py::arg("degree"), py::arg("c_nonzero") = false);
  m.def("conformal_products", [] { return wrap([&] { return commands::conformal_products(); }); });

  m.def("lie_of", [](long range) { return wrap([&] { return commands::lie_of(range); }); }, py::arg("range") = 8);
  m.def("ns_check", [](long range, bool corrupt) { return wrap([&] { return commands::ns_check(range, corrupt); }); },
        py::arg("range") = 8, py::arg("corrupt") = false);
  m.def("quotient", [](long alpha, long beta, long z) { return wrap([&] { return commands::quotient(alpha, beta, z); }); },
        py::arg("alpha"), py::arg("beta"), py::arg("z"));

  m.def("normal_form", [](const std::string& module, const std::optional<std::string>& vector, const std::string& word,
                          const std::string& base, const std::string& strategy, long fuel) {
    return wrap([&] { return commands::normal_form(parse(module), parse_optional(vector), word, base, strategy, fuel); });
  }, py::arg("module"), py::arg("vector") = py::none(), py::arg("word") = "", py::arg("base") = "",
     py::arg("strategy") = "rightmost", py::arg("fuel") = induced::kDefaultFuel);
  m.def("act", [](const std::string& module, const std::string& vector, const std::string& word,
                  const std::string& coeff, long fuel) {
    return wrap([&] { return commands::act(parse(module), parse(vector), word, coeff, fuel); });
  }, py::arg("module"), py::arg("vector"), py::arg("word"), py::arg("coeff") = "1",
     py::arg("fuel") = induced::kDefaultFuel);

  m.def("probe", [](const std::string& module, const std::optional<std::string>& vectors, long random,
                    long max_weight, std::optional<unsigned long> seed, long sample_bound, long fuel) {
    return wrap([&] {
      commands::ProbeRequest request{parse_optional(vectors), random, max_weight, seed, sample_bound};
      return commands::probe(parse(module), request, fuel);
    });
  }, py::arg("module"), py::arg("vectors") = py::none(), py::arg("random") = 0, py::arg("max_weight") = 6,
     py::arg("seed") = py::none(), py::arg("sample_bound") = 4, py::arg("fuel") = induced::kDefaultFuel);
  m.def("validate_module", [](const std::string& module, long sample_bound, long fuel) {
    return wrap([&] { return commands::validate_module(parse(module), sample_bound, fuel); });
  }, py::arg("module"), py::arg("sample_bound") = 4, py::arg("fuel") = induced::kDefaultFuel);
}
