#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "topoglyph/rotsys_search.hpp"

using namespace topoglyph;

namespace {

// All rotation systems on 1..n by direct product of the per-vertex cycles.
std::vector<RotationSystem> all_systems(int n) {
  std::vector<std::vector<CyclicPerm>> choices(n + 1);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> others;
    for (int u = 1; u <= n; ++u)
      if (u != v) others.push_back(u);
    std::vector<int> tail(others.begin() + 1, others.end());
    std::sort(tail.begin(), tail.end());
    do {
      std::vector<int> seq{others.front()};
      seq.insert(seq.end(), tail.begin(), tail.end());
      choices[v].push_back(CyclicPerm(seq));
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  std::vector<RotationSystem> out;
  std::vector<int> ground;
  for (int v = 1; v <= n; ++v) ground.push_back(v);
  std::vector<std::size_t> pick(n + 1, 0);
  while (true) {
    std::map<int, CyclicPerm> rots;
    for (int v = 1; v <= n; ++v) rots[v] = choices[v][pick[v]];
    out.push_back(RotationSystem(ground, rots));
    int v = n;
    while (v >= 1 && ++pick[v] == choices[v].size()) pick[v--] = 0;
    if (v == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_good(4) finds the eight table rows") {
  auto rep = enumerate_good(4);
  CHECK(rep.count == 8);
}

TEST_CASE("enumerate_good(5) equals the naive filter over 7776 candidates") {
  auto candidates = all_systems(5);
  REQUIRE(candidates.size() == 7776);
  BigInt naive = 0;
  for (const auto& r : candidates)
    if (is_good(r)) ++naive;
  SearchOptions opts;
  auto rep = enumerate_good(5, opts);
  CHECK(rep.count == naive);
  // identical counts independent of the worker pool
  opts.workers = 8;
  CHECK(enumerate_good(5, opts).count == rep.count);
}

TEST_CASE("witness collection respects the cap and yields good systems") {
  SearchOptions opts;
  opts.max_witnesses = 3;
  auto rep = enumerate_good(5, opts);
  CHECK(rep.witnesses.size() == 3);
  for (const auto& w : rep.witnesses) CHECK(is_good(w));
}

TEST_CASE("extend_good matches the naive filter at n = 4 -> 5") {
  for (const auto& base :
       {RotationSystem::convex(4), RotationSystem::twisted(4)}) {
    std::set<CyclicPerm> naive;
    BigInt naive_count = 0;
    for (const auto& r : all_systems(5)) {
      std::vector<int> sub{1, 2, 3, 4};
      if (is_good(r) && r.restricted(sub) == base) {
        naive.insert(r.rotation(5));
        ++naive_count;
      }
    }
    auto rep = extend_good(base);
    CHECK(rep.count == naive_count);
    std::set<CyclicPerm> allowed(rep.allowed_rotations.begin(),
                                 rep.allowed_rotations.end());
    CHECK(allowed == naive);
  }
}

TEST_CASE("trivial allowed rotations from the unavoidable families") {
  auto conv = extend_good(RotationSystem::convex(4));
  std::set<CyclicPerm> ac(conv.allowed_rotations.begin(),
                          conv.allowed_rotations.end());
  CHECK(ac.count(CyclicPerm({1, 2, 3, 4})) == 1);  // convex(5) extends
  auto tw = extend_good(RotationSystem::twisted(4));
  std::set<CyclicPerm> at(tw.allowed_rotations.begin(),
                          tw.allowed_rotations.end());
  CHECK(at.count(CyclicPerm({3, 2, 1, 4})) == 1);  // twisted(5) extends
}

TEST_CASE("budgets raise instead of returning partial counts") {
  SearchOptions opts;
  opts.node_budget = 10;
  CHECK_THROWS_AS(enumerate_good(5, opts), BudgetExceeded);
}
