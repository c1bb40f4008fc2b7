#include "topoglyph/chords.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace topoglyph {

ChordDiagram::ChordDiagram(int n_, std::vector<std::pair<int, int>> m)
    : n(n_), matching(std::move(m)) {
  std::vector<bool> used(2 * n + 1, false);
  for (auto& [a, b] : matching) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > 2 * n) throw std::invalid_argument("ChordDiagram: position out of range");
    if (used[a] || used[b]) throw std::invalid_argument("ChordDiagram: position reused");
    used[a] = used[b] = true;
  }
  if ((int)matching.size() != n)
    throw std::invalid_argument("ChordDiagram: wrong chord count");
  std::sort(matching.begin(), matching.end());
}

int crossings(const ChordDiagram& d) {
  int k = 0;
  for (std::size_t i = 0; i < d.matching.size(); ++i)
    for (std::size_t j = i + 1; j < d.matching.size(); ++j) {
      auto [a, b] = d.matching[i];
      auto [c, e] = d.matching[j];
      if (a < c && c < b && b < e) ++k;
    }
  return k;
}

void for_each_diagram(unsigned n,
                      const std::function<void(const ChordDiagram&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(2 * n + 1, false);
  std::function<void()> rec = [&] {
    int first = 0;
    for (int p = 1; p <= 2 * (int)n; ++p)
      if (!used[p]) {
        first = p;
        break;
      }
    if (first == 0) {
      f(ChordDiagram((int)n, pairs));
      return;
    }
    used[first] = true;
    for (int q = first + 1; q <= 2 * (int)n; ++q) {
      if (used[q]) continue;
      used[q] = true;
      pairs.emplace_back(first, q);
      rec();
      pairs.pop_back();
      used[q] = false;
    }
    used[first] = false;
  };
  rec();
}

std::map<int, BigInt> count_diagrams_by_crossings(unsigned n, unsigned limit) {
  if (n > limit) throw std::domain_error("count_diagrams: n above limit");
  std::map<int, BigInt> buckets;
  for_each_diagram(n, [&](const ChordDiagram& d) { buckets[crossings(d)] += 1; });
  return buckets;
}

BigInt count_diagrams(unsigned n, unsigned k, unsigned limit) {
  auto buckets = count_diagrams_by_crossings(n, limit);
  auto it = buckets.find((int)k);
  return it == buckets.end() ? BigInt(0) : it->second;
}

SawtoothCode sawtooth_encode(const ChordDiagram& d) {
  SawtoothCode code;
  code.parens.assign(2 * d.n, false);
  for (auto& [a, b] : d.matching) code.parens[a - 1] = true;

  // Chords indexed by right endpoints left to right; matching is sorted by
  // left endpoint, so re-sort by right endpoint.
  auto by_right = d.matching;
  std::sort(by_right.begin(), by_right.end(),
            [](auto& x, auto& y) { return x.second < y.second; });
  for (auto& [a, b] : by_right) {
    int ki = 0;
    for (auto& [c, e] : d.matching)
      if (a < c && c < b && b < e) ++ki;
    code.kappa.push_back(ki);
  }
  return code;
}

ChordDiagram sawtooth_decode(const SawtoothCode& c) {
  int total = (int)c.parens.size();
  if (total % 2 != 0) throw std::invalid_argument("sawtooth_decode: odd length");
  int n = total / 2;
  if ((int)c.kappa.size() != n)
    throw std::invalid_argument("sawtooth_decode: kappa length mismatch");

  // Open diagonals bottom-to-top; a chord opened later sits below the
  // earlier ones, so new left endpoints go to the front.
  std::vector<int> open;  // left endpoint positions, open[0] = bottom
  std::vector<std::pair<int, int>> pairs;
  int next_kappa = 0;
  for (int pos = 1; pos <= total; ++pos) {
    if (c.parens[pos - 1]) {
      open.insert(open.begin(), pos);
    } else {
      if (next_kappa >= n) throw std::invalid_argument("sawtooth_decode: unbalanced");
      int ki = c.kappa[next_kappa++];
      if (ki < 0 || ki >= (int)open.size())
        throw std::invalid_argument("sawtooth_decode: kappa entry out of range");
      pairs.emplace_back(open[ki], pos);
      open.erase(open.begin() + ki);
    }
  }
  if (!open.empty()) throw std::invalid_argument("sawtooth_decode: unbalanced");
  return ChordDiagram(n, std::move(pairs));
}

}  // namespace topoglyph
