#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "topoglyph/exact.hpp"
#include "topoglyph/rotsys.hpp"

namespace topoglyph {

struct SearchOptions {
  int workers = 1;
  std::size_t max_witnesses = 0;
  std::uint64_t node_budget = 0;          // 0 = unlimited
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
  int n_limit = 6;  // resource guard for enumerate_good
};

// Thrown when a node or time budget runs out; never a silent partial count.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchReport {
  BigInt count;
  std::vector<RotationSystem> witnesses;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

// Exact count of good abstract rotation systems on labels 1..n.  DFS fixes
// rotations label by label and prunes on every fully determined 4-subset.
// The count is independent of the worker count.
SearchReport enumerate_good(int n, const SearchOptions& opts = {});

struct ExtendReport {
  BigInt count;  // good extensions of R by element n+1
  std::vector<CyclicPerm> allowed_rotations;  // rotations of n+1 with >= 1 completion
  std::vector<RotationSystem> witnesses;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

// All good extensions of a good system on 1..n by the element n+1: a cyclic
// n-permutation for n+1 plus an insertion position in each existing rotation.
ExtendReport extend_good(const RotationSystem& r, const SearchOptions& opts = {});

// Does any good extension place the given rotation at the new element?
bool extension_exists_with_rotation(const RotationSystem& r,
                                    const CyclicPerm& new_rotation,
                                    std::uint64_t* nodes = nullptr);

}  // namespace topoglyph
