#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multidesign/catalog.hpp"
#include "multidesign/constructions.hpp"
#include "multidesign/design_io.hpp"
#include "multidesign/errors.hpp"
#include "multidesign/feasibility.hpp"
#include "multidesign/search.hpp"
#include "multidesign/verifier.hpp"

namespace py = pybind11;
using namespace multidesign;

namespace {

py::list edge_tuples(const EdgeList& edges) {
  py::list out;
  for (const Edge& e : edges) out.append(py::make_tuple(e.lo, e.hi));
  return out;
}

py::tuple block_tuple(const Block& b) {
  const auto& v = b.vertices();
  return py::make_tuple(b.is_hexagon() ? "hexagon" : "prism", py::make_tuple(v[0], v[1], v[2], v[3], v[4], v[5]));
}

DesignKind kind_arg(const std::string& kind) {
  const auto k = parse_design_kind(kind);
  if (!k) throw py::value_error("kind must be decomposition, packing or covering");
  return *k;
}

}  // namespace

PYBIND11_MODULE(_multidesign, m) {
  m.doc() = "Hexagon/prism decompositions, packings and coverings of complete graphs";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Design>(m, "Design")
      .def_property_readonly("kind", [](const Design& d) { return to_string(d.kind); })
      .def_property_readonly("host", [](const Design& d) { return to_string(d.host); })
      .def_property_readonly("order", [](const Design& d) { return d.host.vertices().size(); })
      .def_property_readonly("blocks",
                             [](const Design& d) {
                               py::list out;
                               for (const Block& b : d.blocks) out.append(block_tuple(b));
                               return out;
                             })
      .def_property_readonly("leave", [](const Design& d) { return edge_tuples(d.leave); })
      .def_property_readonly("padding", [](const Design& d) { return edge_tuples(d.padding); })
      .def_property_readonly("hexagon_count", &Design::hexagon_count)
      .def_property_readonly("prism_count", &Design::prism_count)
      .def("to_json", &emit_design_json)
      .def_static("from_json", [](const std::string& text) { return parse_design_json(text); })
      .def("__eq__", [](const Design& a, const Design& b) { return a == b; })
      .def("__repr__", [](const Design& d) {
        return "<Design " + to_string(d.kind) + " of " + to_string(d.host) + ": " +
               std::to_string(d.hexagon_count()) + " hexagons, " + std::to_string(d.prism_count()) + " prisms>";
      });

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("n", &FeasibilityReport::n)
      .def_readonly("decomposition_exists", &FeasibilityReport::decomposition_exists)
      .def_readonly("min_leave", &FeasibilityReport::min_leave)
      .def_readonly("min_padding", &FeasibilityReport::min_padding)
      .def_readonly("notes", &FeasibilityReport::notes)
      .def_property_readonly("block_solutions", [](const FeasibilityReport& r) {
        py::list out;
        for (const auto& c : r.block_solutions) out.append(py::make_tuple(c.hexagons, c.prisms));
        return out;
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("valid", &VerificationReport::valid)
      .def_readonly("hexagon_count", &VerificationReport::hexagon_count)
      .def_readonly("prism_count", &VerificationReport::prism_count)
      .def_property_readonly("leave", [](const VerificationReport& r) { return edge_tuples(r.leave); })
      .def_property_readonly("padding", [](const VerificationReport& r) { return edge_tuples(r.padding); })
      .def_property_readonly("failures", [](const VerificationReport& r) {
        py::list out;
        for (const Finding& f : r.failures) out.append(py::make_tuple(to_string(f.code), f.message));
        return out;
      });

  m.def("classify", &classify, py::arg("n"));
  m.def(
      "construct", [](std::uint32_t n, const std::string& kind) { return construct(n, kind_arg(kind)); }, py::arg("n"),
      py::arg("kind") = "decomposition");
  m.def(
      "verify",
      [](const Design& d, bool require_both_types) { return verify_design(d, {require_both_types}); },
      py::arg("design"), py::arg("require_both_types") = true);
  m.def("catalog_keys", [] {
    std::vector<std::string> out;
    for (const auto& key : catalog::keys()) out.push_back(catalog::to_string(key));
    return out;
  });
  m.def(
      "catalog_get",
      [](const std::string& key) {
        const auto k = catalog::parse_key(key);
        if (!k) throw py::key_error(key);
        return catalog::get(*k);
      },
      py::arg("key"));
  m.def(
      "search",
      [](std::uint32_t n, const std::string& blocks, std::optional<std::uint64_t> budget) {
        const auto types = parse_block_types(blocks);
        if (!types) throw py::value_error("blocks must be hexagon, prism or both");
        SearchConfig cfg = *types == BlockTypes::Both ? SearchConfig{} : SearchConfig::only(*types);
        cfg.node_budget = budget;
        const SearchOutcome out = search_multidecomposition(Host::complete(n), cfg);
        return py::make_tuple(to_string(out.status), out.design, out.stats.nodes);
      },
      py::arg("n"), py::arg("blocks") = "both", py::arg("budget") = py::none());
  m.def(
      "confirm_nonexistence",
      [](std::uint32_t n) {
        const NonexistenceReport r = confirm_nonexistence(n);
        return py::make_tuple(r.analytic_nonexistence, r.enumerative_nonexistence);
      },
      py::arg("n"));
}
