#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topoglyph/exact.hpp"

namespace topoglyph {

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // vertices 1..n, no loops/multi

  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  std::size_t m() const { return edges.size(); }
  std::vector<int> degrees() const;  // index 0 unused

  bool operator==(const SimpleGraph&) const = default;
};

// Rooted connected planar maps with M edges: 2(2M)! 3^M / (M! (M+2)!).
BigInt tutte_maps(unsigned m);

// Rooted connected planar loopless maps with M edges: 6(4M+1)! / (M! (3M+3)!).
BigInt walsh_lehman_loopless(unsigned m);

// Rooted simple quadrangulations of the disc with N internal and 2M+4
// external vertices: (3M+3)!(2N+M-1)! / ((M-1)!(2M+3)!N!(N+M+1)!).  M >= 1.
BigInt mullin_schellenberg(unsigned m, unsigned n);

// Isomorphism classes of simple arrangements of n pseudochords with at most
// k crossings: binom(3n-3, n-2) * binom(3n+2k, n+k+1).  n >= 2.
BigInt arrangement_bound(unsigned n, unsigned k);

// Number of noncrossing diagrams baseline times binom(n+k, n) (chords module
// consumes this as its Read bound).
BigInt read_bound(unsigned n, unsigned k);

// p(G) = sum_v binom(deg v, 2).
BigInt adjacent_edge_pairs(const SimpleGraph& g);

// Rational upper bound for f(n,m): sqrt(2) m^{3/2} when m >= n^2/4, else
// ((n^2-2m)^{3/2} - n^3)/2 + 2nm.  Irrational terms are rounded outward.
Rational nikiforov_bound(unsigned n, unsigned m);

// Inverse Ackermann hierarchy: alpha_1(m) = ceil(m/2), alpha_d(1) = 0 for
// d >= 2, alpha_d(m) = 1 + alpha_d(alpha_{d-1}(m)).
std::uint64_t alpha_d(unsigned d, std::uint64_t m);
unsigned inverse_ackermann(std::uint64_t m);

// Exact variance of the cross-edge count between two fixed clusters under a
// uniform random q-partition.
Rational cross_variance(const SimpleGraph& g, unsigned q);

struct PartitionResult {
  std::vector<int> cluster;  // cluster[v] in 1..q, index 0 unused
  std::uint64_t attempts = 0;
};

// Samples uniform q-partitions (each vertex independent) until every edge
// {i,j} of the pattern graph h satisfies |E(G[V_i,V_j])| >= 2m/q^2 - sqrt(r)
// sigma, with sigma from cross_variance.  Deterministic under a fixed seed.
std::optional<PartitionResult> find_partition(
    const SimpleGraph& g, unsigned q, unsigned r,
    const std::vector<std::pair<int, int>>& h_edges, std::uint64_t seed,
    std::uint64_t max_attempts = 1000000);

}  // namespace topoglyph
