#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topoglyph {

// One endpoint symbol a_i or b_i of pseudochord i.
struct Endpoint {
  int label;
  bool is_b;
  auto operator<=>(const Endpoint&) const = default;
  std::string str() const;
};

// Cyclic sequence of the 2n pseudochord endpoints on the boundary circle,
// with a designated cut position fixing a linearization.
class PerimetricOrder {
 public:
  PerimetricOrder() = default;
  PerimetricOrder(std::vector<Endpoint> sequence, int cut = 0);

  static PerimetricOrder parse(const std::vector<std::string>& symbols,
                               int cut = 0);

  int n() const { return (int)sequence_.size() / 2; }
  const std::vector<Endpoint>& sequence() const { return sequence_; }
  int cut() const { return cut_; }

  // The sequence rotated so the cut position comes first.
  std::vector<Endpoint> linearized() const;

  // Position of the given endpoint in the stored (uncut) sequence.
  int position(const Endpoint& e) const;

  auto operator<=>(const PerimetricOrder&) const = default;

 private:
  std::vector<Endpoint> sequence_;
  int cut_ = 0;
};

// Interleaving pairs of the cyclic order: exactly the crossing pairs.
std::set<std::pair<int, int>> crossing_pairs(const PerimetricOrder& order);

// crossing_orders[i] lists the partner labels along pseudochord i in order
// from a_i to b_i.
using CrossingOrders = std::map<int, std::vector<int>>;

struct Arrangement {
  PerimetricOrder order;
  CrossingOrders crossing_orders;
  auto operator<=>(const Arrangement&) const = default;
};

// Checks structural consistency and realizability (the incremental inserter
// accepts the prescribed crossing orders).
bool is_valid(const Arrangement& a);

int total_crossings(const Arrangement& a);

// Left-endpoint binary encoding: bits[i] has one bit per crossing on i, in
// order along i from its earlier endpoint in the linearization.
struct AlphaCode {
  std::map<int, std::vector<int>> bits;
  auto operator<=>(const AlphaCode&) const = default;
};

struct InvalidCode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlphaCode encode(const Arrangement& a);

// Inverse of encode on its image; throws InvalidCode on any bit string not
// produced by encode for this order.
Arrangement decode(const PerimetricOrder& order, const AlphaCode& code);

// All isomorphism classes with the given perimetric order, by incremental
// insertion over simple dual-face paths.  Deterministic canonical order,
// independent of the worker count.
std::vector<Arrangement> enumerate_classes(const PerimetricOrder& order,
                                           int workers = 1, int n_limit = 5);

// All perimetric orders of n pseudochords in canonical labeling: chords
// numbered by first endpoint position, first endpoint named a_i, cut 0.
std::vector<PerimetricOrder> all_perimetric_orders(int n);

// Planar dual of the arrangement: one vertex per cell, one per boundary
// arc, edges across chord segments and boundary arcs plus the outer cycle.
struct DualMap {
  int n = 0;
  int k = 0;
  int external_count = 0;  // boundary-arc vertices
  int internal_count = 0;  // cell vertices
  // vertex ids: 0..2n-1 are the arc vertices, then the cell vertices
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> inner_faces;  // one per primal vertex
  std::vector<int> outer_face;                // the arc cycle
};

DualMap dual_quadrangulation(const Arrangement& a);

bool inner_faces_are_quadrilaterals(const DualMap& d);

// A 4-cycle is separating if deleting its four vertices disconnects the
// rest of the dual graph.
bool has_separating_four_cycle(const DualMap& d);

// Primal map counts for the Euler check: V = 2n + k, E = 3n + 2k, faces by
// rotation traversal (including the outer face).
struct PrimalStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

PrimalStats primal_stats(const Arrangement& a);

}  // namespace topoglyph
