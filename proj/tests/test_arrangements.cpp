#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "topoglyph/arrangement.hpp"
#include "topoglyph/bounds.hpp"

using namespace topoglyph;

namespace {

// All bit strings of the shape demanded by the order's interleaving counts.
std::vector<AlphaCode> all_codes(const PerimetricOrder& po) {
  auto pairs = crossing_pairs(po);
  std::map<int, int> deg;
  for (int i = 1; i <= po.n(); ++i) deg[i] = 0;
  for (auto [i, j] : pairs) {
    ++deg[i];
    ++deg[j];
  }
  std::vector<AlphaCode> out{AlphaCode{}};
  for (int i = 1; i <= po.n(); ++i) out.front().bits[i] = {};
  for (const auto& [i, k] : deg) {
    std::vector<AlphaCode> next;
    for (const auto& base : out)
      for (int mask = 0; mask < (1 << k); ++mask) {
        AlphaCode c = base;
        for (int b = 0; b < k; ++b) c.bits[i].push_back(mask >> b & 1);
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("perimetric order basics") {
  auto po = PerimetricOrder::parse({"a1", "a2", "b1", "b2"});
  CHECK(po.n() == 2);
  CHECK(crossing_pairs(po) == std::set<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(PerimetricOrder::parse({"a1", "a1", "b1", "b1"}),
                  std::invalid_argument);
}

TEST_CASE("one crossing has exactly one class") {
  auto po = PerimetricOrder::parse({"a1", "a2", "b1", "b2"});
  auto classes = enumerate_classes(po);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].crossing_orders ==
        CrossingOrders{{1, {2}}, {2, {1}}});
  CHECK(is_valid(classes[0]));
}

TEST_CASE("three pairwise crossing chords give two classes") {
  auto po = PerimetricOrder::parse({"a1", "a2", "a3", "b1", "b2", "b3"});
  auto classes = enumerate_classes(po);
  CHECK(classes.size() == 2);
}

TEST_CASE("decode handles the anchor cases") {
  auto po = PerimetricOrder::parse({"a1", "a2", "b1", "b2"});
  AlphaCode good;
  good.bits = {{1, {1}}, {2, {0}}};
  auto a = decode(po, good);
  CHECK(a.crossing_orders == CrossingOrders{{1, {2}}, {2, {1}}});
  AlphaCode bad;
  bad.bits = {{1, {0}}, {2, {1}}};
  CHECK_THROWS_AS(decode(po, bad), InvalidCode);
}

TEST_CASE("all_perimetric_orders hits every matching once") {
  CHECK(all_perimetric_orders(1).size() == 1);
  CHECK(all_perimetric_orders(2).size() == 3);
  CHECK(all_perimetric_orders(3).size() == 15);
  CHECK(all_perimetric_orders(4).size() == 105);
}

TEST_CASE("encode/decode bijection against the enumeration oracle, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& po : all_perimetric_orders(n)) {
      auto classes = enumerate_classes(po);
      int k = (int)crossing_pairs(po).size();
      CHECK(BigInt((int)classes.size()) <= BigInt(1) << (2 * k));
      std::set<AlphaCode> codes;
      for (const auto& a : classes) {
        CHECK(is_valid(a));
        auto code = encode(a);
        CHECK(codes.insert(code).second);  // injectivity
        auto back = decode(po, code);
        CHECK(back == a);
      }
      // decode accepts exactly the image of encode
      for (const auto& code : all_codes(po)) {
        bool in_image = codes.count(code) > 0;
        bool accepted = true;
        try {
          auto a = decode(po, code);
          accepted = codes.count(encode(a)) > 0;
        } catch (const InvalidCode&) {
          accepted = false;
        }
        CHECK(accepted == in_image);
      }
    }
  }
}

TEST_CASE("determinism across worker counts") {
  for (const auto& po : all_perimetric_orders(3)) {
    auto a = enumerate_classes(po, 1);
    auto b = enumerate_classes(po, 8);
    CHECK(a == b);
  }
}

TEST_CASE("duality counts, quadrilaterals, Euler: all orders n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& po : all_perimetric_orders(n)) {
      for (const auto& a : enumerate_classes(po)) {
        int k = total_crossings(a);
        auto d = dual_quadrangulation(a);
        CHECK(d.external_count == 2 * n);
        CHECK(d.internal_count == n + k + 1);
        CHECK((int)d.inner_faces.size() == 2 * n + k);
        CHECK(inner_faces_are_quadrilaterals(d));
        CHECK_FALSE(has_separating_four_cycle(d));
        CHECK((int)d.edges.size() == 5 * n + 2 * k);
        auto ps = primal_stats(a);
        CHECK(ps.vertices == 2 * n + k);
        CHECK(ps.edges == 3 * n + 2 * k);
        CHECK(ps.vertices - ps.edges + ps.faces == 2);
      }
    }
  }
}

TEST_CASE("class totals respect the arrangement bound") {
  for (int n = 2; n <= 3; ++n) {
    std::map<int, BigInt> by_k;
    for (const auto& po : all_perimetric_orders(n))
      for (const auto& a : enumerate_classes(po))
        ++by_k[total_crossings(a)];
    BigInt cumulative = 0;
    for (const auto& [k, cnt] : by_k) {
      cumulative += cnt;
      CHECK(cumulative <= arrangement_bound((unsigned)n, (unsigned)k));
    }
  }
}
