#include "topoglyph/json_io.hpp"

#include <string>

namespace topoglyph {

namespace {

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

Edge edge_from(const json& j) {
  return make_edge(j.at(0).get<int>(), j.at(1).get<int>());
}

json pair_json(const EdgePair& p) {
  return json::array({edge_json(p.first), edge_json(p.second)});
}

EdgePair pair_from(const json& j) {
  return make_edge_pair(edge_from(j.at(0)), edge_from(j.at(1)));
}

std::string edge_key(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Edge edge_from_key(const std::string& key) {
  auto dash = key.find('-');
  if (dash == std::string::npos)
    throw std::invalid_argument("edge key must look like \"1-2\"");
  return make_edge(std::stoi(key.substr(0, dash)),
                   std::stoi(key.substr(dash + 1)));
}

json walk_json(const FacialWalk& w) {
  json out = json::array();
  for (const auto& d : w)
    out.push_back(json::array(
        {d.edge.first, d.edge.second, d.seg, d.dir}));
  return out;
}

FacialWalk walk_from(const json& j) {
  FacialWalk w;
  for (const auto& dj : j)
    w.push_back({make_edge(dj.at(0).get<int>(), dj.at(1).get<int>()),
                 dj.at(2).get<int>(), dj.at(3).get<int>()});
  return w;
}

}  // namespace

json to_json(const RotationSystem& r) {
  json rots = json::object();
  for (int v : r.ground()) rots[std::to_string(v)] = r.rotation(v).elements();
  return {{"ground", r.ground()}, {"rotations", rots}};
}

RotationSystem rotation_system_from_json(const json& j) {
  std::vector<int> ground = j.at("ground").get<std::vector<int>>();
  std::map<int, CyclicPerm> rots;
  for (const auto& [key, val] : j.at("rotations").items())
    rots[std::stoi(key)] = CyclicPerm(val.get<std::vector<int>>());
  return RotationSystem(std::move(ground), std::move(rots));
}

json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(edge_json(e));
  return {{"n", g.n}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& ej : j.at("edges")) edges.push_back(edge_from(ej));
  return SimpleGraph(j.at("n").get<int>(), std::move(edges));
}

json to_json(const Arrangement& a) {
  json order = json::array();
  for (const auto& e : a.order.sequence()) order.push_back(e.str());
  json co = json::object();
  for (const auto& [i, lst] : a.crossing_orders) co[std::to_string(i)] = lst;
  return {{"order", order}, {"cut", a.order.cut()}, {"crossing_orders", co}};
}

Arrangement arrangement_from_json(const json& j) {
  std::vector<std::string> symbols;
  for (const auto& s : j.at("order")) symbols.push_back(s.get<std::string>());
  int cut = j.value("cut", 0);
  CrossingOrders co;
  for (const auto& [key, val] : j.at("crossing_orders").items())
    co[std::stoi(key)] = val.get<std::vector<int>>();
  return {PerimetricOrder::parse(symbols, cut), std::move(co)};
}

json to_json(const Drawing& d) {
  json vr = json::object();
  for (const auto& [v, rot] : d.vertex_rotations)
    vr[std::to_string(v)] = rot.elements();
  json ec = json::object();
  for (const auto& [e, lst] : d.edge_crossings) {
    json arr = json::array();
    for (const Edge& f : lst) arr.push_back(edge_json(f));
    ec[edge_key(e)] = arr;
  }
  json cr = json::array();
  for (const auto& [p, rot] : d.crossing_rotations)
    cr.push_back({{"pair", pair_json(p)}, {"order", rot.elements()}});
  json fs = json::array();
  for (const auto& face : d.face_structure) {
    json fj = json::array();
    for (const auto& w : face) fj.push_back(walk_json(w));
    fs.push_back(fj);
  }
  return {{"graph", to_json(d.graph)},
          {"vertex_rotations", vr},
          {"edge_crossings", ec},
          {"crossing_rotations", cr},
          {"face_structure", fs}};
}

Drawing drawing_from_json(const json& j) {
  Drawing d;
  d.graph = graph_from_json(j.at("graph"));
  for (const auto& [key, val] : j.at("vertex_rotations").items())
    d.vertex_rotations[std::stoi(key)] =
        CyclicPerm(val.get<std::vector<int>>());
  for (const auto& [key, val] : j.at("edge_crossings").items()) {
    auto& lst = d.edge_crossings[edge_from_key(key)];
    for (const auto& ej : val) lst.push_back(edge_from(ej));
  }
  for (const auto& cj : j.at("crossing_rotations"))
    d.crossing_rotations[pair_from(cj.at("pair"))] =
        CyclicPerm(cj.at("order").get<std::vector<int>>());
  if (j.contains("face_structure"))
    for (const auto& fj : j.at("face_structure")) {
      FaceWalks face;
      for (const auto& wj : fj) face.push_back(walk_from(wj));
      d.face_structure.push_back(std::move(face));
    }
  return d;
}

json to_json(const ATGraph& g) {
  json pairs = json::array();
  for (const auto& p : g.crossing_pairs) pairs.push_back(pair_json(p));
  return {{"graph", to_json(g.graph)}, {"crossing_pairs", pairs}};
}

json to_json(const TopoSpanningTree& t) {
  json crossings = json::array();
  for (const auto& p : t.crossings) crossings.push_back(pair_json(p));
  json arcs = json::array();
  for (const auto& a : t.arcs)
    arcs.push_back({{"edge", edge_json(a.edge)},
                    {"seg_lo", a.seg_lo},
                    {"seg_hi", a.seg_hi}});
  return {{"vertices", t.vertices}, {"crossings", crossings}, {"arcs", arcs}};
}

json to_json(const TRepresentation& t) {
  json piece_of = json::object();
  for (const auto& [lab, pe] : t.piece_of)
    piece_of[std::to_string(lab)] = {{"edge", edge_json(pe.first)},
                                     {"index", pe.second}};
  auto elem_json = [](const PolygonElement& e) {
    return json::array({e.at_vertex ? "corner" : "side", e.index});
  };
  json types = json::object();
  for (const auto& [lab, pr] : t.types)
    types[std::to_string(lab)] =
        json::array({elem_json(pr.first), elem_json(pr.second)});
  json tc = json::array();
  for (const auto& p : t.tree_crossings) tc.push_back(pair_json(p));
  return {{"tree", to_json(t.tree)},
          {"polygon_size", t.polygon_size},
          {"pseudochords", to_json(t.pseudochords)},
          {"piece_of", piece_of},
          {"types", types},
          {"tree_crossings", tc}};
}

}  // namespace topoglyph
