#pragma once

#include <compare>
#include <vector>

#include "topoglyph/drawing.hpp"

namespace topoglyph {

// A maximal run of consecutive strands of one edge between two tree nodes.
// Strand s of edge {u,v} (u < v) is the piece between the s-th and
// (s+1)-th node along the edge, counted from u.  The run covers strands
// seg_lo..seg_hi inclusive.
struct TreeArc {
  Edge edge;
  int seg_lo = 0;
  int seg_hi = 0;

  auto operator<=>(const TreeArc&) const = default;
};

// A spanning tree drawn inside a drawing: it passes through every graph
// vertex and may branch or turn at crossings.  `crossings` lists the
// crossings used as tree nodes; every other included crossing is a plain
// interior point of an arc.
struct TopoSpanningTree {
  std::vector<int> vertices;
  std::vector<EdgePair> crossings;
  std::vector<TreeArc> arcs;

  bool operator==(const TopoSpanningTree&) const = default;
};

// Builds a canonical spanning tree of a topologically connected drawing.
// Throws std::invalid_argument if the drawing is invalid or its components
// cannot be joined through crossings.
TopoSpanningTree spanning_tree(const Drawing& d);

}  // namespace topoglyph
