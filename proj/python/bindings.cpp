#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circlesep/circles.hpp"
#include "circlesep/dynamics.hpp"
#include "circlesep/error.hpp"
#include "circlesep/io.hpp"
#include "circlesep/separability_oracle.hpp"
#include "circlesep/verify.hpp"
#include "circlesep/voronoi.hpp"

namespace py = pybind11;
using namespace circlesep;

namespace {

// Rationals cross the boundary as canonical "p/q" strings; the Python layer
// converts to and from fractions.Fraction.
using StrPoint = std::pair<std::string, std::string>;

DotConfig make_config(const std::vector<StrPoint>& pts) {
  std::vector<PlanarPoint> planar;
  planar.reserve(pts.size());
  for (const auto& [u, v] : pts) planar.push_back({parse_rational(u), parse_rational(v)});
  return DotConfig::from_planar(std::move(planar));
}

std::vector<StrPoint> planar_strings(const DotConfig& c) {
  std::vector<StrPoint> out;
  for (const auto& p : c.planar()) out.emplace_back(format_rational(p.u), format_rational(p.v));
  return out;
}

std::vector<int> indices(DotSet s) {
  std::vector<int> out;
  for (int i = 0; i < kMaxDots; ++i)
    if (contains(s, i)) out.push_back(i);
  return out;
}

DotSet to_dotset(const std::vector<int>& idx, int n) {
  DotSet s = 0;
  for (int i : idx) {
    if (i < 0 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "dot index " + std::to_string(i));
    s |= bit(i);
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact circle counts, higher-order spherical Voronoi graphs and their local moves.";

  static py::exception<Error> error(m, "CirclesepError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(to_string(e.code()), e.what()).ptr());
    }
  });

  py::class_<DotConfig>(m, "Config")
      .def(py::init(&make_config), py::arg("planar"))
      .def("__len__", &DotConfig::size)
      .def("planar", &planar_strings)
      .def("to_json", [](const DotConfig& c) { return dump(config_to_json(c)); })
      .def_static("from_json", [](const std::string& s) {
        try {
          return config_from_json(Json::parse(s));
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::Parse, e.what());
        }
      });

  m.def("random_config", &random_config, py::arg("n"), py::arg("seed"));
  m.def("general_position_violation", [](const DotConfig& c) { return is_general_position(c).violation; });

  m.def("incident_histogram", py::overload_cast<const DotConfig&>(&incident_histogram));
  m.def("count_oriented_incident", py::overload_cast<const DotConfig&, int>(&count_oriented_incident));
  m.def("hull_face_count", py::overload_cast<const DotConfig&>(&hull_face_count));
  m.def("avoidant_partition_count", py::overload_cast<const DotConfig&, int, int>(&avoidant_partition_count));
  m.def("planar_interior_histogram", &planar_interior_histogram);
  m.def("enumerate_separable", [](const DotConfig& c, int k) {
    std::vector<std::vector<int>> out;
    for (DotSet s : enumerate_separable(c, k)) out.push_back(indices(s));
    return out;
  });
  m.def("oracle_separable",
        [](const DotConfig& c, const std::vector<int>& subset) { return oracle_separable(c, to_dotset(subset, c.size())); });

  m.def("strata_counts", [](const DotConfig& c, int k) {
    const auto s = strata_counts(build_graph(c, k));
    return std::make_tuple(s.whites, s.blacks, s.edges, s.regions);
  });
  m.def("gluing_count_check", &gluing_count_check);

  // JSON documents are returned as text; the Python layer parses them.
  m.def("counts_report_json", [](const DotConfig& c) { return dump(counts_report(c)); });
  m.def("voronoi_json", [](const DotConfig& c, int k) { return dump(graph_to_json(c, build_graph(c, k))); });
  m.def("voronoi_dot", [](const DotConfig& c, int k) { return graph_to_dot(build_graph(c, k)); });
  m.def(
      "move_log_json",
      [](const DotConfig& a, const DotConfig& b, int k, int max_retries, std::uint64_t seed) {
        py::gil_scoped_release release;
        return dump(move_log_to_json(move_sequence_with_retry(a, b, k, max_retries, seed), a.size(), k));
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("max_retries") = 8, py::arg("seed") = 0);
  m.def(
      "verify_all_json",
      [](int n_min, int n_max, int seeds, std::uint64_t seed_base) {
        VerifyGrid g;
        g.n_min = n_min;
        g.n_max = n_max;
        g.seeds = seeds;
        g.seed_base = seed_base;
        py::gil_scoped_release release;
        return dump(verify_report_json(verify_all(g)));
      },
      py::arg("n_min") = 4, py::arg("n_max") = 10, py::arg("seeds") = 5, py::arg("seed_base") = 0);
}
