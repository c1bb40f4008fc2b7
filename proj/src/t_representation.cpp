#include "topoglyph/t_representation.hpp"

#include <algorithm>
#include <stdexcept>

#include "topoglyph/planar_map.hpp"

namespace topoglyph {

namespace {

std::vector<int> path_nodes(const PlanarMap& m, const Edge& e) {
  std::vector<int> p{e.first};
  const auto& mid = m.nodes_along(e);
  p.insert(p.end(), mid.begin(), mid.end());
  p.push_back(e.second);
  return p;
}

int element_position(const PolygonElement& e) {
  return e.at_vertex ? 2 * e.index + 1 : 2 * e.index;
}

}  // namespace

TRepresentation t_representation(const Drawing& d, const TopoSpanningTree& t) {
  auto diag = validate(d);
  if (!diag.ok)
    throw std::invalid_argument("t_representation: invalid drawing: " +
                                diag.message);
  TRepresentation out;
  out.tree = t;
  PlanarMap m(d);

  std::map<Edge, std::set<int>> tree_segs;
  for (const auto& arc : t.arcs)
    for (int s = arc.seg_lo; s <= arc.seg_hi; ++s)
      tree_segs[arc.edge].insert(s);
  std::set<int> tree_node(t.vertices.begin(), t.vertices.end());
  for (const auto& p : t.crossings) tree_node.insert(m.crossing_id(p));
  auto is_tree_strand = [&](const Edge& e, int seg) {
    auto it = tree_segs.find(e);
    return it != tree_segs.end() && it->second.count(seg);
  };
  auto on_tree = [&](int node) {
    for (const auto& dart : m.rotation(node))
      if (is_tree_strand(dart.edge, dart.seg)) return true;
    return false;
  };

  // crossings absorbed by the tree
  for (int node = d.graph.n + 1; node <= m.node_count(); ++node)
    if (on_tree(node)) out.tree_crossings.insert(m.crossing_of(node));

  // pieces: maximal non-tree runs of each edge, split where the run passes
  // through a point of the tree
  struct Piece {
    Edge edge;
    int idx, lo, hi;
  };
  std::vector<Piece> pieces;
  std::map<std::pair<Edge, int>, int> piece_at;  // (edge, seg) -> piece id
  for (const auto& [e, lst] : d.edge_crossings) {
    (void)lst;
    auto path = path_nodes(m, e);
    int len = m.segment_count(e), idx = 0, start = -1;
    for (int s = 0; s <= len; ++s) {
      bool free = s < len && !is_tree_strand(e, s);
      bool breaks = s == len || !free || (start >= 0 && on_tree(path[s]));
      if (start >= 0 && breaks) {
        pieces.push_back({e, idx++, start, s - 1});
        start = -1;
      }
      if (free && start < 0) start = s;
    }
    for (const auto& p : pieces)
      if (p.edge == e)
        for (int s = p.lo; s <= p.hi; ++s)
          piece_at[{e, s}] = (int)(&p - pieces.data());
  }

  if (tree_segs.empty()) {
    if (!pieces.empty())
      throw std::invalid_argument("t_representation: tree misses the drawing");
    return out;  // single-vertex drawing
  }

  // boundary walk of the cut-open tree face
  std::vector<StrandDart> tree_darts;
  for (const auto& dart : m.all_darts())
    if (is_tree_strand(dart.edge, dart.seg)) tree_darts.push_back(dart);
  StrandDart start_dart;
  bool have_start = false;
  for (const auto& dart : tree_darts)
    if (tree_node.count(m.tail(dart)) && (!have_start || dart < start_dart)) {
      start_dart = dart;
      have_start = true;
    }
  if (!have_start) throw std::logic_error("tree walk has no starting dart");

  struct Record {
    int pid;
    bool at_lo;  // endpoint sits at the low-segment end of the piece
    PolygonElement where;
  };
  std::vector<Record> records;
  int side = 0;
  StrandDart cur = start_dart;
  do {
    int x = m.head(cur);
    bool corner = tree_node.count(x) > 0;
    const auto& rot = m.rotation(x);
    StrandDart back = PlanarMap::reversed(cur);
    std::size_t pos = 0;
    while (rot[pos] != back) ++pos;
    StrandDart next = back;
    for (std::size_t k = 1; k <= rot.size(); ++k) {
      const StrandDart& dd = rot[(pos + k) % rot.size()];
      if (is_tree_strand(dd.edge, dd.seg)) {
        next = dd;
        break;
      }
      records.push_back({piece_at.at({dd.edge, dd.seg}), dd.dir > 0,
                         PolygonElement{corner, side}});
    }
    if (corner) ++side;
    cur = next;
  } while (cur != start_dart);
  out.polygon_size = side;
  if (side != 2 * (int)tree_node.size() - 2)
    throw std::logic_error("tree walk corner count is off");

  // label pieces by first appearance along the walk
  std::map<int, int> label_of;  // pid -> label
  std::vector<Endpoint> seq;
  for (const auto& r : records) {
    auto it = label_of.find(r.pid);
    if (it == label_of.end()) {
      int lab = (int)label_of.size() + 1;
      label_of[r.pid] = lab;
      seq.push_back({lab, false});
      out.types[lab] = {r.where, r.where};
    } else {
      seq.push_back({it->second, true});
      out.types[it->second].second = r.where;
    }
  }
  if (seq.size() != 2 * pieces.size())
    throw std::logic_error("piece endpoint count is off");
  std::map<int, bool> a_at_lo;
  {
    std::set<int> seen;
    for (const auto& r : records)
      if (seen.insert(r.pid).second) a_at_lo[r.pid] = r.at_lo;
  }
  for (const auto& [pid, lab] : label_of)
    out.piece_of[lab] = {pieces[pid].edge, pieces[pid].idx};

  CrossingOrders co;
  for (const auto& [pid, lab] : label_of) {
    const Piece& p = pieces[pid];
    auto path = path_nodes(m, p.edge);
    std::vector<int> along;
    for (int s = p.lo + 1; s <= p.hi; ++s) {
      const EdgePair& pr = m.crossing_of(path[s]);
      Edge other = (pr.first == p.edge) ? pr.second : pr.first;
      int j = 0;
      const auto& onodes = m.nodes_along(other);
      while (onodes[j] != path[s]) ++j;
      along.push_back(label_of.at(piece_at.at({other, j})));
    }
    if (!a_at_lo.at(pid)) std::reverse(along.begin(), along.end());
    co[lab] = std::move(along);
  }

  if (!pieces.empty()) {
    out.pseudochords = {PerimetricOrder(seq, 0), std::move(co)};
    if (!is_valid(out.pseudochords))
      throw std::logic_error("pseudochords do not form a valid arrangement");
  }
  return out;
}

TRepresentation t_representation(const Drawing& d) {
  return t_representation(d, spanning_tree(d));
}

TypePairClass classify_type_pair(
    const std::pair<PolygonElement, PolygonElement>& s,
    const std::pair<PolygonElement, PolygonElement>& t, int polygon_size) {
  auto norm = [](std::pair<PolygonElement, PolygonElement> p) {
    if (p.second < p.first) std::swap(p.first, p.second);
    return p;
  };
  auto ns = norm(s), nt = norm(t);
  if (ns == nt) return TypePairClass::Parallel;
  int shared = 0;
  for (const auto& x : {ns.first, ns.second})
    for (const auto& y : {nt.first, nt.second})
      if (x == y) ++shared;
  if (shared > 0) return TypePairClass::Adjacent;
  int period = 2 * polygon_size;
  int p1 = element_position(ns.first), p2 = element_position(ns.second);
  auto between = [&](int q) {  // strictly inside the arc p1 -> p2
    return (q - p1 + period) % period > 0 &&
           (q - p1 + period) % period < (p2 - p1 + period) % period;
  };
  bool b1 = between(element_position(nt.first));
  bool b2 = between(element_position(nt.second));
  return (b1 != b2) ? TypePairClass::Crossing : TypePairClass::Avoiding;
}

ATGraph at_graph_from_trep(const SimpleGraph& g, const TRepresentation& t) {
  ATGraph out;
  out.graph = g;
  out.crossing_pairs = t.tree_crossings;
  for (const auto& [i, lst] : t.pseudochords.crossing_orders)
    for (int j : lst)
      if (j > i)
        out.crossing_pairs.insert(make_edge_pair(t.piece_of.at(i).first,
                                                 t.piece_of.at(j).first));
  return out;
}

}  // namespace topoglyph
