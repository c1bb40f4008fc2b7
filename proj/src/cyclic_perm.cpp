#include "topoglyph/cyclic_perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace topoglyph {

CyclicPerm::CyclicPerm(std::vector<int> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) return;
  std::unordered_set<int> seen(elems_.begin(), elems_.end());
  if (seen.size() != elems_.size())
    throw std::invalid_argument("CyclicPerm: labels must be distinct");
  auto it = std::min_element(elems_.begin(), elems_.end());
  std::rotate(elems_.begin(), it, elems_.end());
}

bool CyclicPerm::contains(int label) const {
  return std::find(elems_.begin(), elems_.end(), label) != elems_.end();
}

CyclicPerm CyclicPerm::restricted(const std::vector<int>& keep) const {
  std::vector<int> sub;
  for (int x : elems_)
    if (std::find(keep.begin(), keep.end(), x) != keep.end()) sub.push_back(x);
  return CyclicPerm(std::move(sub));
}

CyclicPerm CyclicPerm::reversed() const {
  std::vector<int> rev(elems_.rbegin(), elems_.rend());
  return CyclicPerm(std::move(rev));
}

}  // namespace topoglyph
