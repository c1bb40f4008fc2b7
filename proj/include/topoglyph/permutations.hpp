#pragma once

#include <set>
#include <vector>

namespace topoglyph {

// values[i] is the image of position i+1; a bijection on {1..n}.
struct Permutation {
  std::vector<int> values;

  explicit Permutation(std::vector<int> v);
  Permutation() = default;

  int n() const { return (int)values.size(); }
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return values < o.values; }
};

struct PermutationSet {
  int n = 0;
  std::set<Permutation> members;

  PermutationSet(int n, std::set<Permutation> members);
};

// Order pattern of pi at the given positions (strictly increasing, 1-based).
Permutation restriction(const Permutation& pi, const std::vector<int>& positions);

// Every |positions|-permutation occurs as a restriction of some member.
bool is_shattered(const PermutationSet& p, const std::vector<int>& positions);

// Largest k such that some k-tuple of positions is shattered (brute force).
int vc_dimension(const PermutationSet& p);

}  // namespace topoglyph
