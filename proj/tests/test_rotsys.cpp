#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "topoglyph/rotsys.hpp"

using namespace topoglyph;
using topoglyph::testing::random_complete_drawing;
using topoglyph::testing::rotation_system_of;

namespace {

// The eight realizable classes on {1,2,3,4}, rotations in label order.
// Values frozen from an independent hand derivation of the sign table.
const std::vector<std::pair<QuadrupleTag, std::vector<std::vector<int>>>>
    kTable = {
        {QuadrupleTag::H1, {{2, 4, 3}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}}},
        {QuadrupleTag::H2, {{2, 3, 4}, {1, 3, 4}, {1, 4, 2}, {1, 3, 2}}},
        {QuadrupleTag::H3, {{2, 4, 3}, {1, 4, 3}, {1, 4, 2}, {1, 3, 2}}},
        {QuadrupleTag::H4, {{2, 4, 3}, {1, 3, 4}, {1, 2, 4}, {1, 3, 2}}},
        {QuadrupleTag::H1R, {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}},
        {QuadrupleTag::H2R, {{2, 4, 3}, {1, 4, 3}, {1, 2, 4}, {1, 2, 3}}},
        {QuadrupleTag::H3R, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}},
        {QuadrupleTag::H4R, {{2, 3, 4}, {1, 4, 3}, {1, 4, 2}, {1, 2, 3}}},
};

std::vector<RotationSystem> all_systems4() {
  std::vector<RotationSystem> out;
  std::vector<std::vector<std::vector<int>>> choices(4);
  const int others[4][3] = {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
  for (int v = 0; v < 4; ++v) {
    choices[v].push_back({others[v][0], others[v][1], others[v][2]});
    choices[v].push_back({others[v][0], others[v][2], others[v][1]});
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<int>> rots;
    for (int v = 0; v < 4; ++v) rots.push_back(choices[v][(mask >> v) & 1]);
    out.push_back(RotationSystem::from_lists(rots));
  }
  return out;
}

}  // namespace

TEST_CASE("the sixteen systems on four labels split eight/eight by parity") {
  std::set<RotationSystem> table;
  for (const auto& [tag, rots] : kTable)
    table.insert(RotationSystem::from_lists(rots));
  REQUIRE(table.size() == 8);
  int realizable = 0;
  for (const auto& r : all_systems4()) {
    int negatives = 0;
    for (int v = 1; v <= 4; ++v)
      if (rotation_sign(r, v) == Sign::Minus) ++negatives;
    bool parity = negatives % 2 == 0;
    CHECK(is_realizable4(r) == parity);
    CHECK(parity == (table.count(r) == 1));
    if (is_realizable4(r)) ++realizable;
  }
  CHECK(realizable == 8);
}

TEST_CASE("classify_quadruple names each table row") {
  for (const auto& [tag, rots] : kTable) {
    auto cls = classify_quadruple(RotationSystem::from_lists(rots));
    CHECK(cls.tag == tag);
  }
  // crossing pairs per class
  auto pair_of = [](QuadrupleTag t) {
    return classify_quadruple(
               RotationSystem::from_lists(
                   std::find_if(kTable.begin(), kTable.end(),
                                [&](const auto& row) {
                                  return row.first == t;
                                })
                       ->second))
        .crossing_pair;
  };
  CHECK_FALSE(pair_of(QuadrupleTag::H1).has_value());
  CHECK_FALSE(pair_of(QuadrupleTag::H1R).has_value());
  CHECK(*pair_of(QuadrupleTag::H3) ==
        make_crossing_pair({1, 3}, {2, 4}));
  CHECK(*pair_of(QuadrupleTag::H3R) ==
        make_crossing_pair({1, 3}, {2, 4}));
  CHECK(*pair_of(QuadrupleTag::H2) ==
        make_crossing_pair({1, 4}, {2, 3}));
  CHECK(*pair_of(QuadrupleTag::H2R) ==
        make_crossing_pair({1, 4}, {2, 3}));
  CHECK(*pair_of(QuadrupleTag::H4) ==
        make_crossing_pair({1, 2}, {3, 4}));
  CHECK(*pair_of(QuadrupleTag::H4R) ==
        make_crossing_pair({1, 2}, {3, 4}));
}

TEST_CASE("classify_quadruple agrees with the straight-line oracle") {
  // convex quadrilateral and triangle-with-interior-point, all 24 labelings
  const std::vector<std::vector<Point>> configs = {
      {{Rational(0), Rational(0)},
       {Rational(6), Rational(0)},
       {Rational(7), Rational(5)},
       {Rational(1), Rational(6)}},
      {{Rational(0), Rational(0)},
       {Rational(10), Rational(0)},
       {Rational(5), Rational(9)},
       {Rational(5), Rational(3)}}};
  for (const auto& base : configs) {
    std::vector<int> perm{0, 1, 2, 3};
    do {
      std::vector<Point> pts(4);
      for (int i = 0; i < 4; ++i) pts[i] = base[perm[i]];
      auto d = from_straight_line(pts, topoglyph::testing::complete_edges(4));
      auto r = rotation_system_of(d);
      auto cls = classify_quadruple(r);
      REQUIRE(cls.tag != QuadrupleTag::NotRealizable);
      auto at = at_graph(d);
      if (at.crossing_pairs.empty()) {
        CHECK_FALSE(cls.crossing_pair.has_value());
      } else {
        REQUIRE(at.crossing_pairs.size() == 1);
        REQUIRE(cls.crossing_pair.has_value());
        CHECK(*cls.crossing_pair == *at.crossing_pairs.begin());
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("crossing_pairs_complete matches geometry on random drawings") {
  std::mt19937_64 rng(20250826);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 4 + (int)(rng() % 4);
    auto d = random_complete_drawing(n, rng);
    auto r = rotation_system_of(d);
    CHECK(crossing_pairs_complete(r) ==
          topoglyph::testing::crossing_pairs_of(at_graph(d)));
  }
}

TEST_CASE("convex and twisted systems") {
  for (int n = 4; n <= 7; ++n) {
    CHECK(is_good(RotationSystem::convex(n)));
    CHECK(is_good(RotationSystem::twisted(n)));
  }
  // convex(5): the five diagonals cross
  auto pairs = crossing_pairs_complete(RotationSystem::convex(5));
  CHECK(pairs == std::set<CrossingPair>{
                     make_crossing_pair({1, 3}, {2, 4}),
                     make_crossing_pair({2, 4}, {3, 5}),
                     make_crossing_pair({1, 3}, {2, 5}),
                     make_crossing_pair({1, 4}, {2, 5}),
                     make_crossing_pair({1, 4}, {3, 5})});
}

TEST_CASE("the two good nonrealizable five-element systems") {
  auto r51 = RotationSystem::from_lists(
      {{2, 5, 3, 4}, {1, 3, 4, 5}, {1, 2, 5, 4}, {1, 2, 5, 3}, {1, 3, 4, 2}});
  auto r52 = RotationSystem::from_lists(
      {{2, 3, 5, 4}, {1, 3, 4, 5}, {1, 5, 2, 4}, {1, 2, 5, 3}, {1, 4, 3, 2}});
  CHECK(is_good(r51));
  CHECK(is_good(r52));
  CHECK_FALSE(r51 == r52);
}

TEST_CASE("triple types and unavoidable subsystems") {
  auto conv = RotationSystem::convex(7);
  auto twist = RotationSystem::twisted(7);
  auto uc = find_unavoidable(conv, 4);
  CHECK(uc.kind == UnavoidableResult::Kind::Convex);
  CHECK(uc.witness.size() == 4);
  auto ut = find_unavoidable(twist, 4);
  CHECK(ut.kind == UnavoidableResult::Kind::Twisted);
  CHECK(ut.witness.size() == 4);
}
