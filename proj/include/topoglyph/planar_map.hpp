#pragma once

#include <map>
#include <vector>

#include "topoglyph/drawing.hpp"

namespace topoglyph {

// The planarized map of a drawing: nodes are graph vertices and crossings,
// edges are strands.  Vertices keep their labels as node ids 1..n; crossing
// nodes get ids n+1, n+2, ... in the order of their edge pairs.
class PlanarMap {
 public:
  explicit PlanarMap(const Drawing& d);

  int n() const { return n_; }
  int node_count() const { return n_ + (int)crossing_ids_.size(); }
  bool is_crossing(int node) const { return node > n_; }
  const EdgePair& crossing_of(int node) const;
  int crossing_id(const EdgePair& p) const { return crossing_ids_.at(p); }

  // interior crossing node ids along an edge, from the smaller endpoint
  const std::vector<int>& nodes_along(const Edge& e) const {
    return edge_nodes_.at(e);
  }
  int segment_count(const Edge& e) const {
    return (int)edge_nodes_.at(e).size() + 1;
  }

  int tail(const StrandDart& d) const;
  int head(const StrandDart& d) const;
  static StrandDart reversed(const StrandDart& d) {
    return {d.edge, d.seg, -d.dir};
  }

  // clockwise rotation of outgoing darts at a node
  const std::vector<StrandDart>& rotation(int node) const {
    return rotations_.at(node);
  }

  // dart following d along its face (face kept on the left)
  StrandDart next_face_dart(const StrandDart& d) const;

  std::vector<StrandDart> all_darts() const;

  // facial walks; walk_of maps every dart to its walk index
  std::vector<FacialWalk> facial_walks() const;
  std::map<StrandDart, int> walk_index() const;

  // connected components of the map as node sets (== topological
  // components together with their crossings)
  std::vector<std::vector<int>> components() const;

 private:
  int n_;
  std::map<EdgePair, int> crossing_ids_;
  std::map<Edge, std::vector<int>> edge_nodes_;
  std::map<int, std::vector<StrandDart>> rotations_;
};

FacialWalk canonical_walk(FacialWalk w);
FacialWalk reversed_walk(const FacialWalk& w);

}  // namespace topoglyph
