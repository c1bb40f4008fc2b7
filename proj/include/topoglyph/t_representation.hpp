#pragma once

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "topoglyph/arrangement.hpp"
#include "topoglyph/drawing.hpp"
#include "topoglyph/spanning_tree.hpp"

namespace topoglyph {

// A position on the boundary polygon obtained by cutting the sphere along
// the spanning tree: either at a corner (a passage through a tree node) or
// somewhere on the open side that precedes it.  Side i runs up to corner i.
struct PolygonElement {
  bool at_vertex = false;  // true: corner index, false: side index
  int index = 0;

  auto operator<=>(const PolygonElement&) const = default;
};

enum class TypePairClass { Parallel, Adjacent, Crossing, Avoiding };

// The drawing cut along a spanning tree: the non-tree edge pieces become
// pseudochords of a single-face polygon, recorded as an arrangement plus
// the polygon positions of every pseudochord end.
struct TRepresentation {
  TopoSpanningTree tree;
  int polygon_size = 0;  // number of corners (= number of sides)
  Arrangement pseudochords;
  // pseudochord label -> (edge, piece index along the edge)
  std::map<int, std::pair<Edge, int>> piece_of;
  // pseudochord label -> polygon positions of its a and b ends
  std::map<int, std::pair<PolygonElement, PolygonElement>> types;
  // crossings absorbed by the tree (not visible among the pseudochords)
  std::set<EdgePair> tree_crossings;
};

TRepresentation t_representation(const Drawing& d, const TopoSpanningTree& t);
TRepresentation t_representation(const Drawing& d);

// How two pseudochord types relate on the polygon boundary.
TypePairClass classify_type_pair(const std::pair<PolygonElement, PolygonElement>& s,
                                 const std::pair<PolygonElement, PolygonElement>& t,
                                 int polygon_size);

// Rebuilds the abstract topological graph encoded by a T-representation.
ATGraph at_graph_from_trep(const SimpleGraph& g, const TRepresentation& t);

}  // namespace topoglyph
