#include "topoglyph/spanning_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "topoglyph/planar_map.hpp"

namespace topoglyph {

namespace {

struct Builder {
  const Drawing& d;
  PlanarMap m;
  std::map<Edge, std::set<int>> included;  // tree strands per edge

  explicit Builder(const Drawing& dr) : d(dr), m(dr) {}

  std::vector<int> path_nodes(const Edge& e) const {
    std::vector<int> p{e.first};
    const auto& mid = m.nodes_along(e);
    p.insert(p.end(), mid.begin(), mid.end());
    p.push_back(e.second);
    return p;
  }

  bool in_tree(int node) const {
    for (const auto& dart : m.rotation(node)) {
      auto it = included.find(dart.edge);
      if (it != included.end() && it->second.count(dart.seg)) return true;
    }
    return false;
  }

  void include_all(const Edge& e) {
    for (int s = 0; s < m.segment_count(e); ++s) included[e].insert(s);
  }

  // Walk along e starting at one of its endpoints; include strands up to
  // the first point that already belongs to the tree.
  void attach_walk(const Edge& e, int from) {
    auto path = path_nodes(e);
    bool forward = (from == e.first);
    int len = m.segment_count(e);
    for (int i = 0; i < len; ++i) {
      int seg = forward ? i : len - 1 - i;
      int far = forward ? path[seg + 1] : path[seg];
      bool stop = in_tree(far);
      included[e].insert(seg);
      if (stop) return;
    }
    throw std::logic_error("attach_walk ran off the edge");
  }

  // Shortest tree connector along f starting at interior node x (both
  // directions end at f's endpoints at the latest).  Ties go toward the
  // smaller endpoint.
  void attach_connector(const Edge& f, int x_node) {
    auto path = path_nodes(f);
    int pos = -1;
    for (int i = 0; i < (int)path.size(); ++i)
      if (path[i] == x_node) pos = i;
    if (pos <= 0 || pos + 1 >= (int)path.size())
      throw std::logic_error("connector crossing not interior to the edge");
    auto reach = [&](int dir) {  // -1 toward f.first, +1 toward f.second
      int steps = 0, i = pos;
      while (true) {
        int far = path[i + dir];
        ++steps;
        if (in_tree(far)) return steps;
        i += dir;
      }
    };
    int down = reach(-1), up = reach(+1);
    int dir = (down <= up) ? -1 : +1;
    int steps = std::min(down, up), i = pos;
    for (int s = 0; s < steps; ++s) {
      included[f].insert(dir < 0 ? i - 1 : i);
      i += dir;
    }
  }
};

std::vector<std::vector<int>> graph_components(const SimpleGraph& g) {
  std::vector<int> parent(g.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : g.edges) parent[find(e.first)] = find(e.second);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= g.n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

// BFS tree edges in discovery order; `forced` may pre-seed the first edge.
std::vector<Edge> bfs_tree(const SimpleGraph& g, const std::set<int>& verts,
                           int root, const Edge* forced) {
  std::map<int, std::vector<int>> nbrs;
  for (const auto& e : g.edges)
    if (verts.count(e.first)) {
      nbrs[e.first].push_back(e.second);
      nbrs[e.second].push_back(e.first);
    }
  for (auto& [v, lst] : nbrs) std::sort(lst.begin(), lst.end());
  std::vector<Edge> tedges;
  std::set<int> visited{root};
  std::queue<int> q;
  q.push(root);
  if (forced) {
    int other = forced->first == root ? forced->second : forced->first;
    visited.insert(other);
    tedges.push_back(*forced);
    q.push(other);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : nbrs[v])
      if (visited.insert(w).second) {
        tedges.push_back(make_edge(v, w));
        q.push(w);
      }
  }
  if (visited.size() != verts.size())
    throw std::invalid_argument("graph component is not connected");
  return tedges;
}

}  // namespace

TopoSpanningTree spanning_tree(const Drawing& d) {
  auto diag = validate(d);
  if (!diag.ok)
    throw std::invalid_argument("spanning_tree: invalid drawing: " +
                                diag.message);
  if (topological_components(d).size() != 1)
    throw std::invalid_argument(
        "spanning_tree: drawing is not topologically connected");

  TopoSpanningTree out;
  for (int v = 1; v <= d.graph.n; ++v) out.vertices.push_back(v);
  if (d.graph.edges.empty()) {
    if (d.graph.n != 1)
      throw std::invalid_argument("edgeless drawing with several vertices");
    return out;
  }

  auto comps = graph_components(d.graph);
  int nc = (int)comps.size();
  std::vector<std::set<int>> vset(nc);
  std::vector<int> comp_of(d.graph.n + 1, -1);
  for (int c = 0; c < nc; ++c)
    for (int v : comps[c]) {
      vset[c].insert(v);
      comp_of[v] = c;
    }
  // order components so every prefix is joined through crossings
  std::set<std::pair<int, int>> comp_adj;
  for (const auto& [e, lst] : d.edge_crossings)
    for (const Edge& f : lst) {
      int a = comp_of[e.first], b = comp_of[f.first];
      if (a != b) comp_adj.insert({std::min(a, b), std::max(a, b)});
    }
  std::vector<int> order{0};
  std::set<int> placed{0};
  while ((int)order.size() < nc) {
    int pick = -1;
    for (int c = 0; c < nc; ++c) {
      if (placed.count(c)) continue;
      bool touches = false;
      for (int p : placed)
        if (comp_adj.count({std::min(c, p), std::max(c, p)})) touches = true;
      if (touches) {
        pick = c;
        break;
      }
    }
    if (pick < 0)
      throw std::invalid_argument("components cannot be joined in order");
    order.push_back(pick);
    placed.insert(pick);
  }

  Builder b(d);
  std::set<int> prefix_comps;
  for (int step = 0; step < nc; ++step) {
    int c = order[step];
    std::vector<Edge> tedges;
    if (step == 0) {
      int root = comps[c].front();
      tedges = bfs_tree(d.graph, vset[c], root, nullptr);
      if (tedges.empty())
        throw std::invalid_argument("first component has no edge");
      b.include_all(tedges.front());
      for (std::size_t j = 1; j < tedges.size(); ++j) {
        const Edge& e = tedges[j];
        int nv = b.in_tree(e.first) ? e.second : e.first;
        b.attach_walk(e, nv);
      }
    } else {
      // smallest crossing pair joining this component to the prefix
      Edge ei, fi;
      bool found = false;
      for (const auto& [e, lst] : d.edge_crossings) {
        if (comp_of[e.first] != c) continue;
        for (const Edge& f : lst)
          if (prefix_comps.count(comp_of[f.first]) &&
              (!found || std::pair(e, f) < std::pair(ei, fi))) {
            ei = e;
            fi = f;
            found = true;
          }
      }
      if (!found) throw std::logic_error("ordered component lost its link");
      bool tree_hit = false;
      for (int x : b.m.nodes_along(ei))
        if (b.in_tree(x)) tree_hit = true;
      if (tree_hit) {
        b.attach_walk(ei, ei.first);
        b.attach_walk(ei, ei.second);
      } else {
        b.include_all(ei);
        b.attach_connector(fi, b.m.crossing_id(make_edge_pair(ei, fi)));
      }
      tedges = bfs_tree(d.graph, vset[c], ei.first, &ei);
      for (std::size_t j = 1; j < tedges.size(); ++j) {
        const Edge& e = tedges[j];
        int nv = b.in_tree(e.first) ? e.second : e.first;
        b.attach_walk(e, nv);
      }
    }
    prefix_comps.insert(c);
  }

  // tree nodes among crossings: included strands on two distinct edges
  auto edges_at = [&](int node) {
    std::set<Edge> es;
    for (const auto& dart : b.m.rotation(node)) {
      auto it = b.included.find(dart.edge);
      if (it != b.included.end() && it->second.count(dart.seg))
        es.insert(dart.edge);
    }
    return es;
  };
  std::set<int> tree_nodes;
  for (int v = 1; v <= d.graph.n; ++v) tree_nodes.insert(v);
  for (int node = d.graph.n + 1; node <= b.m.node_count(); ++node)
    if (edges_at(node).size() >= 2) {
      tree_nodes.insert(node);
      out.crossings.push_back(b.m.crossing_of(node));
    }
  std::sort(out.crossings.begin(), out.crossings.end());

  // arcs: maximal included runs split at interior tree nodes
  for (const auto& [e, segs] : b.included) {
    auto path = b.path_nodes(e);
    int len = b.m.segment_count(e);
    int start = -1;
    for (int s = 0; s <= len; ++s) {
      bool inc = s < len && segs.count(s);
      bool breaks = s == len || !inc ||
                    (start >= 0 && tree_nodes.count(path[s]));
      if (start >= 0 && breaks) {
        out.arcs.push_back({e, start, s - 1});
        start = -1;
      }
      if (inc && start < 0) start = s;
    }
  }

  // sanity: the arcs must form a tree over the tree nodes
  std::map<int, int> uf;
  for (int x : tree_nodes) uf[x] = x;
  std::function<int(int)> find = [&](int x) {
    return uf[x] == x ? x : uf[x] = find(uf[x]);
  };
  for (const auto& arc : out.arcs) {
    auto path = b.path_nodes(arc.edge);
    int u = path[arc.seg_lo], v = path[arc.seg_hi + 1];
    if (!tree_nodes.count(u) || !tree_nodes.count(v))
      throw std::logic_error("arc end is not a tree node");
    uf[find(u)] = find(v);
  }
  if (out.arcs.size() + 1 != tree_nodes.size())
    throw std::logic_error("spanning construction left a cycle or a gap");
  int root = find(*tree_nodes.begin());
  for (int x : tree_nodes)
    if (find(x) != root)
      throw std::logic_error("spanning construction is disconnected");
  return out;
}

}  // namespace topoglyph
