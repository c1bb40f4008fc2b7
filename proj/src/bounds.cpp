#include "topoglyph/bounds.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace topoglyph {

SimpleGraph::SimpleGraph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v)
      throw std::invalid_argument("SimpleGraph: bad edge");
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("SimpleGraph: duplicate edge");
  }
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(n + 1, 0);
  for (auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

BigInt tutte_maps(unsigned m) {
  BigInt p3 = 1;
  for (unsigned i = 0; i < m; ++i) p3 *= 3;
  return exact_div(2 * factorial(2 * m) * p3, factorial(m) * factorial(m + 2));
}

BigInt walsh_lehman_loopless(unsigned m) {
  return exact_div(6 * factorial(4 * m + 1), factorial(m) * factorial(3 * m + 3));
}

BigInt mullin_schellenberg(unsigned m, unsigned n) {
  if (m < 1) throw std::domain_error("mullin_schellenberg: M >= 1 required");
  return exact_div(factorial(3 * m + 3) * factorial(2 * n + m - 1),
                   factorial(m - 1) * factorial(2 * m + 3) * factorial(n) *
                       factorial(n + m + 1));
}

BigInt arrangement_bound(unsigned n, unsigned k) {
  if (n < 2) throw std::domain_error("arrangement_bound: n >= 2 required");
  return binomial(3 * (BigInt)n - 3, (BigInt)n - 2) *
         binomial(3 * (BigInt)n + 2 * (BigInt)k, (BigInt)n + k + 1);
}

BigInt read_bound(unsigned n, unsigned k) {
  return catalan(n) * binomial((BigInt)n + k, (BigInt)n);
}

BigInt adjacent_edge_pairs(const SimpleGraph& g) {
  BigInt total = 0;
  for (int d : g.degrees()) total += (BigInt)d * (d - 1) / 2;
  return total;
}

Rational nikiforov_bound(unsigned n, unsigned m) {
  BigInt nn = n, mm = m;
  if (mm > nn * (nn - 1) / 2)
    throw std::domain_error("nikiforov_bound: m > binom(n,2)");
  if (4 * mm >= nn * nn) {
    // sqrt(2) m^{3/2} = sqrt(2 m^3), rounded up to an integer
    return Rational(ceil_isqrt(2 * mm * mm * mm));
  }
  // ((n^2 - 2m)^{3/2} - n^3)/2 + 2nm, the radical rounded up
  BigInt t = nn * nn - 2 * mm;
  BigInt rad = ceil_isqrt(t * t * t);
  return Rational(rad - nn * nn * nn, 2) + Rational(2 * nn * mm);
}

std::uint64_t alpha_d(unsigned d, std::uint64_t m) {
  if (d < 1 || m < 1) throw std::domain_error("alpha_d: d, m >= 1 required");
  if (d == 1) return (m + 1) / 2;
  if (m == 1) return 0;
  return 1 + alpha_d(d, alpha_d(d - 1, m));
}

unsigned inverse_ackermann(std::uint64_t m) {
  for (unsigned k = 1;; ++k)
    if (alpha_d(k, m) <= 3) return k;
}

Rational cross_variance(const SimpleGraph& g, unsigned q) {
  if (q < 2) throw std::domain_error("cross_variance: q >= 2 required");
  BigInt m = (BigInt)g.m();
  BigInt q2 = (BigInt)q * q, q3 = q2 * q, q4 = q3 * q;
  BigInt p = adjacent_edge_pairs(g);
  Rational ex2 = Rational(2 * m, q2) + Rational(8, q4) * Rational(m * (m - 1), 2) +
                 (Rational(4, q3) - Rational(8, q4)) * Rational(p);
  Rational ex = Rational(2 * m, q2);
  return ex2 - ex * ex;
}

std::optional<PartitionResult> find_partition(
    const SimpleGraph& g, unsigned q, unsigned r,
    const std::vector<std::pair<int, int>>& h_edges, std::uint64_t seed,
    std::uint64_t max_attempts) {
  if (q < 2) throw std::domain_error("find_partition: q >= 2 required");
  for (auto& [i, j] : h_edges)
    if (i < 1 || j < 1 || i > (int)q || j > (int)q || i == j)
      throw std::invalid_argument("find_partition: pattern edge out of range");
  if (h_edges.size() != r)
    throw std::invalid_argument("find_partition: r != |E(H)|");

  Rational sigma2 = cross_variance(g, q);
  Rational ex = Rational(2 * (BigInt)g.m(), (BigInt)q * q);

  // X >= EX - sqrt(r) sigma  <=>  X >= EX or (EX - X)^2 <= r sigma^2
  auto meets = [&](const BigInt& x) {
    Rational rx(x);
    if (rx >= ex) return true;
    Rational d = ex - rx;
    return d * d <= Rational((BigInt)r) * sigma2;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick(1, q);
  std::vector<int> cluster(g.n + 1, 0);
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    for (int v = 1; v <= g.n; ++v) cluster[v] = (int)pick(rng);
    bool ok = true;
    for (auto& [i, j] : h_edges) {
      BigInt x = 0;
      for (auto& [u, v] : g.edges) {
        if ((cluster[u] == i && cluster[v] == j) ||
            (cluster[u] == j && cluster[v] == i))
          ++x;
      }
      if (!meets(x)) {
        ok = false;
        break;
      }
    }
    if (ok) return PartitionResult{cluster, attempt};
  }
  return std::nullopt;
}

}  // namespace topoglyph
