#include "topoglyph/permutations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace topoglyph {

Permutation::Permutation(std::vector<int> v) : values(std::move(v)) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int x : values) {
    if (x < 1 || x > (int)values.size() || seen[x])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[x] = true;
  }
}

PermutationSet::PermutationSet(int n_, std::set<Permutation> members_)
    : n(n_), members(std::move(members_)) {
  for (const auto& p : members)
    if (p.n() != n) throw std::invalid_argument("PermutationSet: size mismatch");
}

Permutation restriction(const Permutation& pi, const std::vector<int>& positions) {
  int k = (int)positions.size();
  for (int i = 0; i < k; ++i) {
    if (positions[i] < 1 || positions[i] > pi.n())
      throw std::invalid_argument("restriction: position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw std::invalid_argument("restriction: positions not increasing");
  }
  std::vector<int> vals(k), rank(k);
  for (int i = 0; i < k; ++i) vals[i] = pi.values[positions[i] - 1];
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vals[a] < vals[b]; });
  for (int r = 0; r < k; ++r) rank[order[r]] = r + 1;
  return Permutation(rank);
}

bool is_shattered(const PermutationSet& p, const std::vector<int>& positions) {
  if (p.members.empty()) throw std::invalid_argument("is_shattered: empty set");
  int k = (int)positions.size();
  std::set<Permutation> seen;
  for (const auto& pi : p.members) seen.insert(restriction(pi, positions));
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 1);
  std::size_t want = 1;
  for (int i = 2; i <= k; ++i) want *= i;
  return seen.size() == want;
}

int vc_dimension(const PermutationSet& p) {
  int best = 0;
  std::vector<int> positions;
  std::function<void(int)> rec = [&](int start) {
    if ((int)positions.size() > best && is_shattered(p, positions))
      best = (int)positions.size();
    for (int i = start; i <= p.n; ++i) {
      positions.push_back(i);
      rec(i + 1);
      positions.pop_back();
    }
  };
  rec(1);
  return best;
}

}  // namespace topoglyph
