#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topoglyph/cyclic_perm.hpp"

namespace topoglyph {

enum class Sign : char { Plus = '+', Minus = '-' };

using VertexPair = std::pair<int, int>;                 // sorted
using CrossingPair = std::pair<VertexPair, VertexPair>; // sorted, disjoint

CrossingPair make_crossing_pair(VertexPair a, VertexPair b);

// Sign pattern of a 4-element rotation system, in sorted label order.
struct Signature {
  Sign signs[4];
  bool operator==(const Signature&) const = default;
  std::string str() const;
};

enum class QuadrupleTag { H1, H2, H3, H4, H1R, H2R, H3R, H4R, NotRealizable };

const char* to_string(QuadrupleTag t);

struct QuadrupleClass {
  QuadrupleTag tag;
  // Absent for H1, H1R and NotRealizable.
  std::optional<CrossingPair> crossing_pair;
};

// One cyclic permutation per ground element, over the other elements.
class RotationSystem {
 public:
  RotationSystem() = default;
  RotationSystem(std::vector<int> ground, std::map<int, CyclicPerm> rotations);

  static RotationSystem convex(int n);
  static RotationSystem twisted(int n);

  // Convenience: rotations listed in label order over ground 1..n.
  static RotationSystem from_lists(const std::vector<std::vector<int>>& rots);

  std::size_t size() const { return ground_.size(); }
  const std::vector<int>& ground() const { return ground_; }
  const CyclicPerm& rotation(int v) const;

  RotationSystem restricted(const std::vector<int>& subset) const;
  RotationSystem reversed() const;

  bool operator==(const RotationSystem&) const = default;
  bool operator<(const RotationSystem& o) const;

 private:
  std::vector<int> ground_;             // sorted
  std::map<int, CyclicPerm> rotations_; // rotations_[v] over ground \ {v}
};

// Sign of the rotation at l in a 4-element system: normalize the 3-cycle to
// start at its smallest label i; positive iff the next label is smaller than
// the last.
Sign rotation_sign(const RotationSystem& r4, int label);

Signature signature(const RotationSystem& r4);

// Parity condition: realizable iff the number of negative rotations is even.
bool is_realizable4(const RotationSystem& r4);

// Classification of a 4-element system onto the eight realizable classes,
// via the order-isomorphism of its labels onto {1,2,3,4}.
QuadrupleClass classify_quadruple(const RotationSystem& r4);

// Every 4-element induced subsystem is realizable.  Requires size >= 4.
bool is_good(const RotationSystem& r);

// Union over all 4-subsets of the crossing pair found by classify_quadruple.
// Requires is_good(r).  For good-but-unrealizable systems this is the formal
// per-quadruple union; no global consistency is attempted.
std::set<CrossingPair> crossing_pairs_complete(const RotationSystem& r);

// Type of the triple base < i < j < k: the concatenated signs t(i)t(j)t(k)
// in restrict(r, {base,i,j,k}), 1 = positive.  The rotation at base must be
// positive on every triple (the system is reversed once if that fixes it).
// Only 111, 100, 010, 001 occur on good systems.
enum class TripleType { T111, T100, T010, T001 };

const char* to_string(TripleType t);

TripleType triple_type(const RotationSystem& r, int base, int i, int j, int k);

struct UnavoidableResult {
  enum class Kind { Convex, Twisted, None } kind;
  std::vector<int> witness;  // empty for None
};

// Brute-force search for an m-subset of ground \ {smallest} whose triples all
// share one type.  111/010 -> Convex, 100/001 -> Twisted.
UnavoidableResult find_unavoidable(const RotationSystem& r, int m);

}  // namespace topoglyph
