#pragma once

#include <compare>
#include <vector>

namespace topoglyph {

// A cyclic sequence of distinct integer labels, read clockwise.  Stored in
// canonical form: rotated so the smallest label comes first.  Equality and
// ordering act on the canonical form, so two rotations of the same cycle
// compare equal.
class CyclicPerm {
 public:
  CyclicPerm() = default;
  explicit CyclicPerm(std::vector<int> elems);

  std::size_t size() const { return elems_.size(); }
  const std::vector<int>& elements() const { return elems_; }

  bool contains(int label) const;

  // Sub-cyclic-sequence on the given labels (order preserved).  Labels not
  // present in the cycle are ignored by the caller's contract checks.
  CyclicPerm restricted(const std::vector<int>& keep) const;

  CyclicPerm reversed() const;

  auto operator<=>(const CyclicPerm&) const = default;

 private:
  std::vector<int> elems_;  // canonical: starts at the smallest label
};

}  // namespace topoglyph
