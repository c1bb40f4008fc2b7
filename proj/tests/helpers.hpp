#pragma once

#include <random>
#include <set>
#include <vector>

#include "topoglyph/drawing.hpp"
#include "topoglyph/rotsys.hpp"

namespace topoglyph::testing {

// Rotation system read off a complete straight-line drawing.
inline RotationSystem rotation_system_of(const Drawing& d) {
  std::map<int, CyclicPerm> rots;
  for (const auto& [v, rot] : d.vertex_rotations) rots[v] = rot;
  std::vector<int> ground;
  for (int v = 1; v <= d.graph.n; ++v) ground.push_back(v);
  return RotationSystem(ground, rots);
}

inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

// Random complete straight-line drawing in general position; retries until
// the exact-geometry importer accepts the points.
inline Drawing random_complete_drawing(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(0, 1000);
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({Rational(coord(rng)), Rational(coord(rng))});
    try {
      return from_straight_line(pts, complete_edges(n));
    } catch (const std::invalid_argument&) {
      // degenerate configuration: draw again
    }
  }
}

inline std::set<CrossingPair> crossing_pairs_of(const ATGraph& at) {
  std::set<CrossingPair> out;
  for (const auto& p : at.crossing_pairs) out.insert(p);
  return out;
}

}  // namespace topoglyph::testing
