#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "topoglyph/exact.hpp"

namespace topoglyph {

// Perfect matching of positions 1..2n.  Linear convention: the circle is cut
// between 2n and 1, so every chord has a left and a right endpoint.
struct ChordDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> matching;  // pairs (left, right), sorted

  ChordDiagram() = default;
  ChordDiagram(int n, std::vector<std::pair<int, int>> matching);

  bool operator==(const ChordDiagram&) const = default;
  bool operator<(const ChordDiagram& o) const { return matching < o.matching; }
};

// Number of interleaving pairs {a<b},{c<d} with a<c<b<d.
int crossings(const ChordDiagram& d);

// Exact counts of diagrams of n chords bucketed by crossing number, by
// streaming over all (2n-1)!! matchings.
std::map<int, BigInt> count_diagrams_by_crossings(unsigned n, unsigned limit = 8);
BigInt count_diagrams(unsigned n, unsigned k, unsigned limit = 8);

// Visit every matching of 2n points exactly once.
void for_each_diagram(unsigned n, const std::function<void(const ChordDiagram&)>& f);

struct SawtoothCode {
  std::vector<bool> parens;  // true = left mark, balanced, length 2n
  std::vector<int> kappa;    // indexed by right endpoints left to right
  bool operator==(const SawtoothCode&) const = default;
};

SawtoothCode sawtooth_encode(const ChordDiagram& d);

// Left-to-right sweep reconstruction.  Throws std::invalid_argument when a
// kappa entry reaches the open-chord count at its step or the parens are
// unbalanced.
ChordDiagram sawtooth_decode(const SawtoothCode& c);

}  // namespace topoglyph
