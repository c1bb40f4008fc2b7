#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topoglyph/bounds.hpp"
#include "topoglyph/cyclic_perm.hpp"
#include "topoglyph/exact.hpp"

namespace topoglyph {

using Edge = std::pair<int, int>;  // sorted endpoints
using EdgePair = std::pair<Edge, Edge>;

Edge make_edge(int u, int v);
EdgePair make_edge_pair(Edge a, Edge b);

// Strand of the planarized map: segment `seg` of an edge (counted from the
// smaller endpoint), traversed toward the larger endpoint when dir = +1.
struct StrandDart {
  Edge edge;
  int seg = 0;
  int dir = +1;
  auto operator<=>(const StrandDart&) const = default;
};

using FacialWalk = std::vector<StrandDart>;  // canonical: smallest rotation
using FaceWalks = std::vector<FacialWalk>;   // sorted walks of one face

// Combinatorial simple topological graph.
struct Drawing {
  SimpleGraph graph;
  // clockwise neighbor order per vertex
  std::map<int, CyclicPerm> vertex_rotations;
  // per edge, crossed edges in order from the smaller endpoint
  std::map<Edge, std::vector<Edge>> edge_crossings;
  // per crossing, clockwise order of the four strand directions, named by
  // the endpoint label each strand leads to
  std::map<EdgePair, CyclicPerm> crossing_rotations;
  // noncontractible faces (>= 2 boundary walks); required when the drawing
  // has more than one topological component
  std::vector<FaceWalks> face_structure;

  bool operator==(const Drawing&) const = default;
};

struct Diagnostics {
  bool ok = true;
  std::string message;
};

Diagnostics validate(const Drawing& d);

struct ATGraph {
  SimpleGraph graph;
  std::set<EdgePair> crossing_pairs;
  bool operator==(const ATGraph&) const = default;
};

ATGraph at_graph(const Drawing& d);

// Equality of AT-graphs under the identity labeling.
bool weak_iso(const Drawing& a, const Drawing& b);

// weak_iso, plus identical per-edge crossing orders, plus equal-or-inverse
// extended rotation systems, plus equal face structures (multi-component).
bool is_isomorphic(const Drawing& a, const Drawing& b);

// Graph components merged whenever any pair of their edges crosses.
std::vector<std::vector<int>> topological_components(const Drawing& d);

using Point = std::pair<Rational, Rational>;

// Oracle import: exact rational predicates; throws std::invalid_argument on
// any degeneracy (coincident/collinear points, concurrent crossings).
// points[i] holds the coordinates of vertex i+1.
Drawing from_straight_line(const std::vector<Point>& points,
                           const std::vector<Edge>& edges);

// The 2^{n/2} same-rotation AT-graphs of K_{2,n}; u_i = i, v = n+1,
// w = n+2.
struct K2nMember {
  std::map<int, CyclicPerm> rotations;
  ATGraph at;
};

std::vector<K2nMember> k2n_family(int n);

}  // namespace topoglyph
