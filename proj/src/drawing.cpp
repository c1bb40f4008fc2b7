#include "topoglyph/drawing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "topoglyph/planar_map.hpp"

namespace topoglyph {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge");
  return {std::min(u, v), std::max(u, v)};
}

EdgePair make_edge_pair(Edge a, Edge b) {
  if (a == b) throw std::invalid_argument("crossing pair needs two edges");
  return {std::min(a, b), std::max(a, b)};
}

namespace {

bool disjoint(const Edge& a, const Edge& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

int index_of(const std::vector<Edge>& lst, const Edge& e) {
  for (int i = 0; i < (int)lst.size(); ++i)
    if (lst[i] == e) return i;
  throw std::logic_error("edge not in crossing list");
}

}  // namespace

PlanarMap::PlanarMap(const Drawing& d) : n_(d.graph.n) {
  std::set<EdgePair> pairs;
  for (const auto& [e, lst] : d.edge_crossings)
    for (const Edge& f : lst) pairs.insert(make_edge_pair(e, f));
  int next_id = n_ + 1;
  for (const auto& p : pairs) crossing_ids_[p] = next_id++;

  for (const auto& [e, lst] : d.edge_crossings) {
    auto& nodes = edge_nodes_[e];
    for (const Edge& f : lst) nodes.push_back(crossing_ids_.at(make_edge_pair(e, f)));
  }

  for (const auto& [v, rot] : d.vertex_rotations) {
    auto& out = rotations_[v];
    for (int w : rot.elements()) {
      Edge e = make_edge(v, w);
      if (v < w)
        out.push_back({e, 0, +1});
      else
        out.push_back({e, segment_count(e) - 1, -1});
    }
  }
  for (const auto& [p, rot] : d.crossing_rotations) {
    auto& out = rotations_[crossing_ids_.at(p)];
    const auto& [e, f] = p;
    int i = index_of(d.edge_crossings.at(e), f);
    int j = index_of(d.edge_crossings.at(f), e);
    for (int t : rot.elements()) {
      if (t == e.first)
        out.push_back({e, i, -1});
      else if (t == e.second)
        out.push_back({e, i + 1, +1});
      else if (t == f.first)
        out.push_back({f, j, -1});
      else if (t == f.second)
        out.push_back({f, j + 1, +1});
      else
        throw std::logic_error("crossing rotation label not an endpoint");
    }
  }
}

const EdgePair& PlanarMap::crossing_of(int node) const {
  for (const auto& [p, id] : crossing_ids_)
    if (id == node) return p;
  throw std::invalid_argument("not a crossing node");
}

int PlanarMap::tail(const StrandDart& d) const {
  const auto& nodes = edge_nodes_.at(d.edge);
  if (d.dir > 0) return d.seg == 0 ? d.edge.first : nodes[d.seg - 1];
  return d.seg == (int)nodes.size() ? d.edge.second : nodes[d.seg];
}

int PlanarMap::head(const StrandDart& d) const { return tail(reversed(d)); }

StrandDart PlanarMap::next_face_dart(const StrandDart& d) const {
  int h = head(d);
  const auto& rot = rotations_.at(h);
  StrandDart r = reversed(d);
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == r) return rot[(i + 1) % rot.size()];
  throw std::logic_error("dart missing from rotation");
}

std::vector<StrandDart> PlanarMap::all_darts() const {
  std::vector<StrandDart> out;
  for (const auto& [e, nodes] : edge_nodes_)
    for (int s = 0; s <= (int)nodes.size(); ++s) {
      out.push_back({e, s, +1});
      out.push_back({e, s, -1});
    }
  return out;
}

std::vector<FacialWalk> PlanarMap::facial_walks() const {
  std::vector<FacialWalk> walks;
  std::set<StrandDart> seen;
  for (const auto& d0 : all_darts()) {
    if (seen.count(d0)) continue;
    FacialWalk w;
    for (StrandDart d = d0; !seen.count(d); d = next_face_dart(d)) {
      seen.insert(d);
      w.push_back(d);
    }
    walks.push_back(std::move(w));
  }
  return walks;
}

std::map<StrandDart, int> PlanarMap::walk_index() const {
  std::map<StrandDart, int> out;
  auto walks = facial_walks();
  for (int i = 0; i < (int)walks.size(); ++i)
    for (const auto& d : walks[i]) out[d] = i;
  return out;
}

std::vector<std::vector<int>> PlanarMap::components() const {
  int total = node_count();
  std::vector<int> parent(total + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& [e, nodes] : edge_nodes_) {
    int prev = e.first;
    for (int x : nodes) {
      unite(prev, x);
      prev = x;
    }
    unite(prev, e.second);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= total; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, nodes] : groups) out.push_back(std::move(nodes));
  std::sort(out.begin(), out.end());
  return out;
}

FacialWalk canonical_walk(FacialWalk w) {
  FacialWalk best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

FacialWalk reversed_walk(const FacialWalk& w) {
  FacialWalk out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(PlanarMap::reversed(*it));
  return out;
}

namespace {

std::optional<std::string> structural_check(const Drawing& d) {
  const auto& g = d.graph;
  std::set<Edge> edge_set(g.edges.begin(), g.edges.end());
  std::map<int, std::set<int>> nbrs;
  for (const auto& e : g.edges) {
    nbrs[e.first].insert(e.second);
    nbrs[e.second].insert(e.first);
  }
  if ((int)d.vertex_rotations.size() != g.n)
    return "vertex_rotations must cover every vertex";
  for (const auto& [v, rot] : d.vertex_rotations) {
    if (v < 1 || v > g.n) return "vertex rotation for unknown vertex";
    std::set<int> elems(rot.elements().begin(), rot.elements().end());
    if (elems.size() != rot.size() || elems != nbrs[v])
      return "vertex rotation does not list the neighbors";
  }
  if (d.edge_crossings.size() != edge_set.size())
    return "edge_crossings must cover every edge";
  std::set<EdgePair> pairs;
  for (const auto& [e, lst] : d.edge_crossings) {
    if (!edge_set.count(e)) return "crossing list for unknown edge";
    std::set<Edge> seen;
    for (const Edge& f : lst) {
      if (!edge_set.count(f)) return "crossing with unknown edge";
      if (!disjoint(e, f)) return "adjacent or identical edges cannot cross";
      if (!seen.insert(f).second) return "edge pair crosses more than once";
      pairs.insert(make_edge_pair(e, f));
    }
  }
  for (const auto& p : pairs) {
    const auto& le = d.edge_crossings.at(p.first);
    const auto& lf = d.edge_crossings.at(p.second);
    if (std::count(le.begin(), le.end(), p.second) != 1 ||
        std::count(lf.begin(), lf.end(), p.first) != 1)
      return "crossing lists are not mutually consistent";
  }
  std::set<EdgePair> rot_keys;
  for (const auto& [p, rot] : d.crossing_rotations) rot_keys.insert(p);
  if (rot_keys != pairs) return "crossing_rotations must cover every crossing";
  for (const auto& [p, rot] : d.crossing_rotations) {
    const auto& [e, f] = p;
    std::set<int> labels{e.first, e.second, f.first, f.second};
    std::set<int> elems(rot.elements().begin(), rot.elements().end());
    if (rot.size() != 4 || elems != labels)
      return "crossing rotation must list the four endpoints";
    const auto& seq = rot.elements();
    for (int i = 0; i < 4; ++i) {
      int a = seq[i], b = seq[(i + 1) % 4];
      bool a_in_e = (a == e.first || a == e.second);
      bool b_in_e = (b == e.first || b == e.second);
      if (a_in_e == b_in_e) return "crossing strands must alternate";
    }
  }
  return std::nullopt;
}

}  // namespace

Diagnostics validate(const Drawing& d) {
  if (auto err = structural_check(d)) return {false, *err};
  PlanarMap m(d);
  auto comps = m.components();
  auto walks = m.facial_walks();
  std::map<StrandDart, int> comp_of_node_dart;
  std::vector<int> comp_of(m.node_count() + 1, -1);
  for (int c = 0; c < (int)comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = c;
  std::vector<int> nodes(comps.size(), 0), strands(comps.size(), 0),
      faces(comps.size(), 0);
  for (int c = 0; c < (int)comps.size(); ++c) nodes[c] = (int)comps[c].size();
  for (const auto& dart : m.all_darts())
    if (dart.dir > 0) ++strands[comp_of[m.tail(dart)]];
  for (const auto& w : walks) ++faces[comp_of[m.tail(w.front())]];
  for (int c = 0; c < (int)comps.size(); ++c) {
    if (strands[c] == 0) {
      if (nodes[c] != 1) return {false, "edgeless component with two nodes"};
      continue;
    }
    if (nodes[c] - strands[c] + faces[c] != 2)
      return {false, "Euler formula fails on a topological component"};
  }

  int tc = (int)topological_components(d).size();
  if (tc <= 1) {
    if (!d.face_structure.empty())
      return {false, "face structure given for a single-component drawing"};
    return {true, ""};
  }
  if (d.face_structure.empty())
    return {false, "multi-component drawing needs a face structure"};
  std::set<FacialWalk> genuine;
  for (auto& w : walks) genuine.insert(canonical_walk(w));
  std::set<FacialWalk> used;
  for (const auto& face : d.face_structure) {
    if (face.size() < 2)
      return {false, "noncontractible face needs at least two walks"};
    for (const auto& w : face) {
      if (!genuine.count(w)) return {false, "face structure lists a non-walk"};
      if (!used.insert(w).second)
        return {false, "face structure reuses a walk"};
    }
  }
  return {true, ""};
}

ATGraph at_graph(const Drawing& d) {
  ATGraph out;
  out.graph = d.graph;
  for (const auto& [e, lst] : d.edge_crossings)
    for (const Edge& f : lst) out.crossing_pairs.insert(make_edge_pair(e, f));
  return out;
}

bool weak_iso(const Drawing& a, const Drawing& b) {
  if (!(a.graph == b.graph))
    throw std::invalid_argument("weak_iso: different underlying graphs");
  return at_graph(a).crossing_pairs == at_graph(b).crossing_pairs;
}

namespace {

template <typename K>
std::map<K, CyclicPerm> reversed_rotations(const std::map<K, CyclicPerm>& m) {
  std::map<K, CyclicPerm> out;
  for (const auto& [k, v] : m) out[k] = v.reversed();
  return out;
}

std::vector<FaceWalks> normalized_faces(std::vector<FaceWalks> fs,
                                        bool reverse) {
  for (auto& face : fs) {
    if (reverse)
      for (auto& w : face) w = canonical_walk(reversed_walk(w));
    std::sort(face.begin(), face.end());
  }
  std::sort(fs.begin(), fs.end());
  return fs;
}

bool faces_equal(const Drawing& a, const Drawing& b) {
  auto fb = normalized_faces(b.face_structure, false);
  return normalized_faces(a.face_structure, false) == fb ||
         normalized_faces(a.face_structure, true) == fb;
}

}  // namespace

bool is_isomorphic(const Drawing& a, const Drawing& b) {
  if (!(a.graph == b.graph))
    throw std::invalid_argument("is_isomorphic: different underlying graphs");
  if (!weak_iso(a, b)) return false;
  // crossing orders compare unreversed in both branches
  if (a.edge_crossings != b.edge_crossings) return false;
  bool direct = a.vertex_rotations == b.vertex_rotations &&
                a.crossing_rotations == b.crossing_rotations;
  bool inverse =
      reversed_rotations(a.vertex_rotations) == b.vertex_rotations &&
      reversed_rotations(a.crossing_rotations) == b.crossing_rotations;
  if (!direct && !inverse) return false;
  if (topological_components(a).size() > 1 && !faces_equal(a, b)) return false;
  return true;
}

std::vector<std::vector<int>> topological_components(const Drawing& d) {
  int n = d.graph.n;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& e : d.graph.edges) unite(e.first, e.second);
  for (const auto& [e, lst] : d.edge_crossings)
    for (const Edge& f : lst) unite(e.first, f.first);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Vec = std::pair<Rational, Rational>;

Vec sub(const Point& a, const Point& b) {
  return {a.first - b.first, a.second - b.second};
}

Rational cross(const Vec& a, const Vec& b) {
  return a.first * b.second - a.second * b.first;
}

int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

int orient(const Point& a, const Point& b, const Point& c) {
  return sign(cross(sub(b, a), sub(c, a)));
}

// counter-clockwise angular order starting from the positive x direction
bool ccw_less(const Vec& a, const Vec& b) {
  auto half = [](const Vec& v) {
    return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

struct Geometry {
  std::vector<Point> points;                    // vertex v -> points[v-1]
  std::map<EdgePair, Point> crossing_points;

  const Point& vertex(int v) const { return points[v - 1]; }
};

}  // namespace

Drawing from_straight_line(const std::vector<Point>& points,
                           const std::vector<Edge>& edges) {
  int n = (int)points.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j])
        throw std::invalid_argument("coincident points");
      for (int k = j + 1; k < n; ++k)
        if (orient(points[i], points[j], points[k]) == 0)
          throw std::invalid_argument("collinear triple");
    }

  Drawing d;
  {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : edges) es.push_back(make_edge(e.first, e.second));
    std::sort(es.begin(), es.end());
    d.graph = SimpleGraph(n, es);
  }

  Geometry geo;
  geo.points = points;
  for (const auto& e : d.graph.edges) d.edge_crossings[e];
  for (std::size_t i = 0; i < d.graph.edges.size(); ++i)
    for (std::size_t j = i + 1; j < d.graph.edges.size(); ++j) {
      Edge e = d.graph.edges[i], f = d.graph.edges[j];
      if (!disjoint(e, f)) continue;
      const Point &a = geo.vertex(e.first), &b = geo.vertex(e.second);
      const Point &c = geo.vertex(f.first), &p = geo.vertex(f.second);
      if (orient(a, b, c) * orient(a, b, p) < 0 &&
          orient(c, p, a) * orient(c, p, b) < 0) {
        Rational t = cross(sub(c, a), sub(p, c)) / cross(sub(b, a), sub(p, c));
        Point x{a.first + t * (b.first - a.first),
                a.second + t * (b.second - a.second)};
        geo.crossing_points[make_edge_pair(e, f)] = x;
        d.edge_crossings[e].push_back(f);
        d.edge_crossings[f].push_back(e);
      }
    }
  {
    std::set<Point> distinct;
    for (const auto& [p, x] : geo.crossing_points)
      if (!distinct.insert(x).second)
        throw std::invalid_argument("three edges through one point");
  }
  // order crossings along each edge from the smaller endpoint
  for (auto& [e, lst] : d.edge_crossings) {
    const Point& a = geo.vertex(e.first);
    Vec dir = sub(geo.vertex(e.second), a);
    std::sort(lst.begin(), lst.end(), [&](const Edge& f1, const Edge& f2) {
      Vec u = sub(geo.crossing_points.at(make_edge_pair(e, f1)), a);
      Vec v = sub(geo.crossing_points.at(make_edge_pair(e, f2)), a);
      return u.first * dir.first + u.second * dir.second <
             v.first * dir.first + v.second * dir.second;
    });
  }
  // clockwise rotations
  std::map<int, std::set<int>> nbrs;
  for (const auto& e : d.graph.edges) {
    nbrs[e.first].insert(e.second);
    nbrs[e.second].insert(e.first);
  }
  for (int v = 1; v <= n; ++v) {
    std::vector<int> order(nbrs[v].begin(), nbrs[v].end());
    std::sort(order.begin(), order.end(), [&](int w1, int w2) {
      return ccw_less(sub(geo.vertex(w1), geo.vertex(v)),
                      sub(geo.vertex(w2), geo.vertex(v)));
    });
    std::reverse(order.begin(), order.end());
    d.vertex_rotations[v] = CyclicPerm(order);
  }
  for (const auto& [p, x] : geo.crossing_points) {
    std::vector<int> labels{p.first.first, p.first.second, p.second.first,
                            p.second.second};
    std::sort(labels.begin(), labels.end(), [&](int t1, int t2) {
      return ccw_less(sub(geo.vertex(t1), x), sub(geo.vertex(t2), x));
    });
    std::reverse(labels.begin(), labels.end());
    d.crossing_rotations[p] = CyclicPerm(labels);
  }

  if (topological_components(d).size() > 1) {
    PlanarMap m(d);
    auto walks = m.facial_walks();
    auto widx = m.walk_index();
    auto comps = m.components();
    std::vector<int> comp_of(m.node_count() + 1, -1);
    for (int c = 0; c < (int)comps.size(); ++c)
      for (int v : comps[c]) comp_of[v] = c;
    auto node_point = [&](int node) -> Point {
      return m.is_crossing(node) ? geo.crossing_points.at(m.crossing_of(node))
                                 : geo.vertex(node);
    };
    std::vector<int> comp_of_walk(walks.size());
    for (int w = 0; w < (int)walks.size(); ++w)
      comp_of_walk[w] = comp_of[m.tail(walks[w].front())];
    // the outer walk of a component runs clockwise: negative shoelace sum;
    // a tree-like component has a single walk of area zero
    std::vector<int> outer_walk(comps.size(), -1);
    std::vector<int> walk_count(comps.size(), 0);
    std::vector<int> sole_walk(comps.size(), -1);
    for (int w = 0; w < (int)walks.size(); ++w) {
      int c = comp_of_walk[w];
      ++walk_count[c];
      sole_walk[c] = w;
      Rational area = 0;
      for (const auto& dart : walks[w])
        area += cross(node_point(m.tail(dart)), node_point(m.head(dart)));
      if (area < 0) outer_walk[c] = w;
    }
    for (int c = 0; c < (int)comps.size(); ++c)
      if (outer_walk[c] < 0 && walk_count[c] == 1) outer_walk[c] = sole_walk[c];
    // upward ray shooting; returns the walk of c's face containing p
    auto locate = [&](const Point& p, int c) -> int {
      std::optional<std::pair<Rational, Rational>> best;  // (y, slope)
      int best_walk = -1;
      for (const auto& dart : m.all_darts()) {
        if (dart.dir < 0 || comp_of[m.tail(dart)] != c) continue;
        Point a = node_point(m.tail(dart)), b = node_point(m.head(dart));
        if (a.first > b.first) std::swap(a, b);
        if (a.first == b.first) continue;  // vertical strand, never hit
        if (!(a.first <= p.first && p.first < b.first)) continue;
        Rational slope = (b.second - a.second) / (b.first - a.first);
        Rational y = a.second + (p.first - a.first) * slope;
        if (y <= p.second) continue;
        std::pair<Rational, Rational> key{y, slope};
        if (!best || key < *best) {
          best = key;
          // keep the leftward dart: p lies on its left, hence in its face
          StrandDart left = dart;
          if (node_point(m.tail(dart)).first < node_point(m.head(dart)).first)
            left = PlanarMap::reversed(dart);
          best_walk = widx.at(left);
        }
      }
      return best_walk;
    };
    int nc = (int)comps.size();
    std::vector<std::vector<int>> inside(nc);  // containing comps + walk
    std::vector<std::vector<int>> inside_walk(nc);
    std::vector<int> depth(nc, 0);
    std::vector<Point> rep(nc);
    for (int c = 0; c < nc; ++c) rep[c] = node_point(comps[c].front());
    for (int c2 = 0; c2 < nc; ++c2)
      for (int c = 0; c < nc; ++c) {
        if (c == c2) continue;
        int w = locate(rep[c2], c);
        if (w >= 0 && w != outer_walk[c]) {
          inside[c2].push_back(c);
          inside_walk[c2].push_back(w);
          ++depth[c2];
        }
      }
    std::map<std::pair<int, int>, FaceWalks> groups;  // (parent comp, walk)
    FaceWalks root;
    for (int c2 = 0; c2 < nc; ++c2) {
      if (outer_walk[c2] < 0) continue;  // edgeless component, no walks
      int parent = -1, pw = -1;
      for (std::size_t t = 0; t < inside[c2].size(); ++t)
        if (parent < 0 || depth[inside[c2][t]] > depth[parent]) {
          parent = inside[c2][t];
          pw = inside_walk[c2][t];
        }
      if (parent < 0)
        root.push_back(canonical_walk(walks[outer_walk[c2]]));
      else
        groups[{parent, pw}].push_back(canonical_walk(walks[outer_walk[c2]]));
    }
    for (auto& [key, children] : groups)
      children.push_back(canonical_walk(walks[key.second]));
    if (root.size() >= 2) d.face_structure.push_back(root);
    for (auto& [key, face] : groups)
      if (face.size() >= 2) d.face_structure.push_back(face);
    d.face_structure = normalized_faces(std::move(d.face_structure), false);
  }

  auto diag = validate(d);
  if (!diag.ok)
    throw std::logic_error("straight-line import inconsistent: " +
                           diag.message);
  return d;
}

std::vector<K2nMember> k2n_family(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("k2n_family: n must be even and >= 2");
  int v = n + 1, w = n + 2;
  std::map<int, CyclicPerm> rotations;
  {
    std::vector<int> rv(n);
    std::iota(rv.begin(), rv.end(), 1);
    rotations[v] = CyclicPerm(rv);
    std::vector<int> rw;
    for (int block = n / 2; block >= 1; --block) {
      rw.push_back(2 * block - 1);
      rw.push_back(2 * block);
    }
    rotations[w] = CyclicPerm(rw);
    for (int i = 1; i <= n; ++i) rotations[i] = CyclicPerm({v, w});
  }
  SimpleGraph g;
  {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i) {
      es.push_back({i, v});
      es.push_back({i, w});
    }
    std::sort(es.begin(), es.end());
    g = SimpleGraph(n + 2, es);
  }
  std::vector<K2nMember> out;
  for (unsigned mask = 0; mask < (1u << (n / 2)); ++mask) {
    K2nMember mem;
    mem.rotations = rotations;
    mem.at.graph = g;
    for (int i = 1; i <= n / 2; ++i) {
      int a = 2 * i - 1, b = 2 * i;
      if (mask >> (i - 1) & 1)
        mem.at.crossing_pairs.insert(
            make_edge_pair(make_edge(v, a), make_edge(w, b)));
      else
        mem.at.crossing_pairs.insert(
            make_edge_pair(make_edge(w, a), make_edge(v, b)));
    }
    out.push_back(std::move(mem));
  }
  return out;
}

}  // namespace topoglyph
