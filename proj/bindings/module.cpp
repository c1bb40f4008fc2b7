// Python bindings for the main operations.  Structured objects travel as
// JSON strings in the same schemas the CLI uses; rotation systems travel as
// plain lists of lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "topoglyph/arrangement.hpp"
#include "topoglyph/bounds.hpp"
#include "topoglyph/chords.hpp"
#include "topoglyph/drawing.hpp"
#include "topoglyph/json_io.hpp"
#include "topoglyph/rotsys.hpp"
#include "topoglyph/rotsys_search.hpp"
#include "topoglyph/spanning_tree.hpp"
#include "topoglyph/t_representation.hpp"

namespace py = pybind11;
using namespace topoglyph;

namespace {

RotationSystem system_from_lists(const std::vector<std::vector<int>>& rots) {
  return RotationSystem::from_lists(rots);
}

std::vector<std::vector<int>> lists_of(const RotationSystem& r) {
  std::vector<std::vector<int>> out;
  for (int v : r.ground()) out.push_back(r.rotation(v).elements());
  return out;
}

Drawing parse_drawing(const std::string& s) {
  return drawing_from_json(json::parse(s));
}

PerimetricOrder parse_order(const std::vector<std::string>& symbols, int cut) {
  return PerimetricOrder::parse(symbols, cut);
}

}  // namespace

PYBIND11_MODULE(_topoglyph, m) {
  m.doc() = "simple topological graphs: rotation systems, arrangements, drawings";

  // ---- rotation systems ----------------------------------------------------
  m.def("convex", [](int n) { return lists_of(RotationSystem::convex(n)); },
        py::arg("n"));
  m.def("twisted", [](int n) { return lists_of(RotationSystem::twisted(n)); },
        py::arg("n"));
  m.def(
      "is_realizable4",
      [](const std::vector<std::vector<int>>& rots) {
        return is_realizable4(system_from_lists(rots));
      },
      py::arg("rotations"));
  m.def(
      "classify_quadruple",
      [](const std::vector<std::vector<int>>& rots) {
        auto c = classify_quadruple(system_from_lists(rots));
        py::dict d;
        d["tag"] = std::string(to_string(c.tag));
        if (c.crossing_pair) {
          const auto& [a, b] = *c.crossing_pair;
          d["crossing_pair"] =
              py::make_tuple(py::make_tuple(a.first, a.second),
                             py::make_tuple(b.first, b.second));
        } else {
          d["crossing_pair"] = py::none();
        }
        return d;
      },
      py::arg("rotations"));
  m.def(
      "is_good",
      [](const std::vector<std::vector<int>>& rots) {
        return is_good(system_from_lists(rots));
      },
      py::arg("rotations"));
  m.def(
      "crossing_pairs_complete",
      [](const std::vector<std::vector<int>>& rots) {
        std::vector<py::tuple> out;
        for (const auto& [a, b] :
             crossing_pairs_complete(system_from_lists(rots)))
          out.push_back(py::make_tuple(py::make_tuple(a.first, a.second),
                                       py::make_tuple(b.first, b.second)));
        return out;
      },
      py::arg("rotations"));
  m.def(
      "enumerate_good",
      [](int n, int workers) {
        SearchOptions o;
        o.workers = workers;
        return enumerate_good(n, o).count.str();
      },
      py::arg("n"), py::arg("workers") = 1);
  m.def(
      "extend_good",
      [](const std::vector<std::vector<int>>& rots, int workers) {
        SearchOptions o;
        o.workers = workers;
        auto rep = extend_good(system_from_lists(rots), o);
        py::dict d;
        d["count"] = rep.count.str();
        std::vector<std::vector<int>> allowed;
        for (const auto& c : rep.allowed_rotations)
          allowed.push_back(c.elements());
        d["allowed_rotations"] = allowed;
        return d;
      },
      py::arg("rotations"), py::arg("workers") = 1);

  // ---- chord diagrams ------------------------------------------------------
  m.def(
      "chord_counts",
      [](unsigned n) {
        py::dict d;
        for (const auto& [k, v] : count_diagrams_by_crossings(n))
          d[py::int_(k)] = v.str();
        return d;
      },
      py::arg("n"));

  // ---- arrangements --------------------------------------------------------
  m.def(
      "arr_enumerate",
      [](const std::vector<std::string>& order, int cut, int workers) {
        std::vector<std::string> out;
        for (const auto& a : enumerate_classes(parse_order(order, cut), workers))
          out.push_back(to_json(a).dump());
        return out;
      },
      py::arg("order"), py::arg("cut") = 0, py::arg("workers") = 1);
  m.def(
      "arr_encode",
      [](const std::string& arrangement_json) {
        auto a = arrangement_from_json(json::parse(arrangement_json));
        std::map<int, std::vector<int>> bits = encode(a).bits;
        return bits;
      },
      py::arg("arrangement_json"));
  m.def(
      "arr_decode",
      [](const std::vector<std::string>& order, int cut,
         const std::map<int, std::vector<int>>& bits) {
        AlphaCode code;
        code.bits = bits;
        return to_json(decode(parse_order(order, cut), code)).dump();
      },
      py::arg("order"), py::arg("cut"), py::arg("bits"));

  // ---- drawings ------------------------------------------------------------
  m.def(
      "from_points",
      [](const std::vector<std::pair<long long, long long>>& points,
         const std::vector<std::pair<int, int>>& edges) {
        std::vector<Point> pts;
        for (auto [x, y] : points) pts.emplace_back(Rational(x), Rational(y));
        std::vector<Edge> es;
        for (auto [u, v] : edges) es.push_back(make_edge(u, v));
        return to_json(from_straight_line(pts, es)).dump();
      },
      py::arg("points"), py::arg("edges"));
  m.def(
      "validate_drawing",
      [](const std::string& s) {
        auto diag = validate(parse_drawing(s));
        return py::make_tuple(diag.ok, diag.message);
      },
      py::arg("drawing_json"));
  m.def(
      "at_graph",
      [](const std::string& s) {
        return to_json(at_graph(parse_drawing(s))).dump();
      },
      py::arg("drawing_json"));
  m.def(
      "weak_iso",
      [](const std::string& a, const std::string& b) {
        return weak_iso(parse_drawing(a), parse_drawing(b));
      },
      py::arg("drawing_json_a"), py::arg("drawing_json_b"));
  m.def(
      "is_isomorphic",
      [](const std::string& a, const std::string& b) {
        return is_isomorphic(parse_drawing(a), parse_drawing(b));
      },
      py::arg("drawing_json_a"), py::arg("drawing_json_b"));
  m.def(
      "spanning_tree",
      [](const std::string& s) {
        return to_json(spanning_tree(parse_drawing(s))).dump();
      },
      py::arg("drawing_json"));
  m.def(
      "t_representation",
      [](const std::string& s) {
        return to_json(t_representation(parse_drawing(s))).dump();
      },
      py::arg("drawing_json"));
  m.def(
      "k2n_family_size",
      [](int n) { return (int)k2n_family(n).size(); },
      py::arg("n"));

  // ---- bounds and formulas -------------------------------------------------
  m.def("tutte_maps", [](unsigned m) { return tutte_maps(m).str(); },
        py::arg("m"));
  m.def("walsh_lehman_loopless",
        [](unsigned m) { return walsh_lehman_loopless(m).str(); }, py::arg("m"));
  m.def("mullin_schellenberg",
        [](unsigned m, unsigned n) { return mullin_schellenberg(m, n).str(); },
        py::arg("m"), py::arg("n"));
  m.def("arrangement_bound",
        [](unsigned n, unsigned k) { return arrangement_bound(n, k).str(); },
        py::arg("n"), py::arg("k"));
  m.def("read_bound",
        [](unsigned n, unsigned k) { return read_bound(n, k).str(); },
        py::arg("n"), py::arg("k"));
  m.def("inverse_ackermann",
        [](std::uint64_t m) { return inverse_ackermann(m); }, py::arg("m"));
  m.def("alpha_d", [](unsigned d, std::uint64_t m) { return alpha_d(d, m); },
        py::arg("d"), py::arg("m"));
  m.def(
      "cross_variance",
      [](int n, const std::vector<std::pair<int, int>>& edges, unsigned q) {
        return cross_variance(SimpleGraph(n, edges), q).str();
      },
      py::arg("n"), py::arg("edges"), py::arg("q"));
  m.def(
      "find_partition",
      [](int n, const std::vector<std::pair<int, int>>& edges, unsigned q,
         unsigned r, const std::vector<std::pair<int, int>>& h_edges,
         std::uint64_t seed,
         std::uint64_t max_attempts) -> std::optional<std::vector<int>> {
        auto res =
            find_partition(SimpleGraph(n, edges), q, r, h_edges, seed, max_attempts);
        if (!res) return std::nullopt;
        return res->cluster;
      },
      py::arg("n"), py::arg("edges"), py::arg("q"), py::arg("r"),
      py::arg("h_edges"), py::arg("seed"), py::arg("max_attempts") = 1000000);
}
