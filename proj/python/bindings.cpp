#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kast/errors.hpp"
#include "kast/matchings.hpp"
#include "kast/rectangles.hpp"
#include "kast/singular.hpp"
#include "kast/verify.hpp"

namespace py = pybind11;
using namespace kast;

namespace {

Cocycle named_class(const PlanarGraph& g, const std::string& name) {
  if (name == "kasteleyn") return kasteleyn_class(g);
  if (name == "zero") return Cocycle::zero(g);
  if (name == "q") return kasteleyn_q_class(g);
  throw std::invalid_argument("unknown class '" + name + "'");
}

// JSON text; the Python side decodes it.
std::string poly_json(const PlanarGraph& g, const std::string& cls, const std::string& backend) {
  const Cocycle c = named_class(g, cls);
  if (backend == "float") return to_json(singular_polynomial(g, c, FloatBackend{})).dump();
  if (backend != "exact") throw std::invalid_argument("backend must be exact or float");
  const auto p = singular_polynomial(g, c, ExactBackend{});
  if (auto ip = to_integer_poly(p)) return to_json(*ip).dump();
  return to_json(p).dump();
}

}  // namespace

PYBIND11_MODULE(_kast, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<RepresentabilityError>(m, "RepresentabilityError", PyExc_ValueError);

  py::class_<PlanarGraph>(m, "Graph")
      .def_property_readonly("vertex_count", &PlanarGraph::vertex_count)
      .def_property_readonly("edge_count", &PlanarGraph::edge_count)
      .def_property_readonly("n_white", &PlanarGraph::n_white)
      .def_property_readonly("n_black", &PlanarGraph::n_black)
      .def_property_readonly("hole_count", [](const PlanarGraph& g) { return g.holes().size(); })
      .def("to_text", &to_graph_text)
      .def("__repr__", &describe);

  m.def("rectangle_grid", &rectangle_grid, py::arg("rows"), py::arg("cols"));
  m.def("aztec_diamond", &aztec_diamond, py::arg("order"));
  m.def("from_ascii", [](const std::string& s) { return from_ascii(s); }, py::arg("region"));
  m.def("parse_graph", [](const std::string& s) { return parse_graph(s); }, py::arg("text"));

  m.def("count_matchings", &count_matchings, py::arg("graph"));
  m.def("matchings", [](const PlanarGraph& g) {
    std::vector<std::string> out;
    for (const Matching& mt : enumerate_matchings(g)) out.push_back(to_string(g, mt));
    return out;
  }, py::arg("graph"));

  m.def("_poly_json", &poly_json, py::arg("graph"), py::arg("cls") = "kasteleyn", py::arg("backend") = "exact");
  m.def("_verify_json", [](const PlanarGraph& g, const std::string& which, std::size_t max_vertices,
                           std::size_t max_m, std::uint64_t seed) {
    return verify_identity(g, parse_identity(which), Limits{max_vertices, max_m}, seed).to_json().dump();
  }, py::arg("graph"), py::arg("identity"), py::arg("max_vertices") = Limits{}.max_vertices,
        py::arg("max_m") = Limits{}.max_m, py::arg("seed") = 0);
  m.def("_closed_form_json", [](int rows, int cols) { return to_json(closed_form_poly(rows, cols)).dump(); },
        py::arg("rows"), py::arg("cols"));
  m.def("sigma_squared", &sigma_squared, py::arg("M"), py::arg("N"), py::arg("k"), py::arg("l"));
  m.def("table_check", [] {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& r : table_check()) out.emplace_back(r.graph, r.pass);
    return out;
  });
}
