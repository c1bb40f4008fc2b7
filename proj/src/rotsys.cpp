#include "topoglyph/rotsys.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace topoglyph {

CrossingPair make_crossing_pair(VertexPair a, VertexPair b) {
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first > b.second) std::swap(b.first, b.second);
  if (b < a) std::swap(a, b);
  return {a, b};
}

std::string Signature::str() const {
  std::string s;
  for (Sign x : signs) s.push_back(static_cast<char>(x));
  return s;
}

const char* to_string(QuadrupleTag t) {
  switch (t) {
    case QuadrupleTag::H1: return "H1";
    case QuadrupleTag::H2: return "H2";
    case QuadrupleTag::H3: return "H3";
    case QuadrupleTag::H4: return "H4";
    case QuadrupleTag::H1R: return "H1R";
    case QuadrupleTag::H2R: return "H2R";
    case QuadrupleTag::H3R: return "H3R";
    case QuadrupleTag::H4R: return "H4R";
    case QuadrupleTag::NotRealizable: return "NotRealizable";
  }
  return "?";
}

RotationSystem::RotationSystem(std::vector<int> ground,
                               std::map<int, CyclicPerm> rotations)
    : ground_(std::move(ground)), rotations_(std::move(rotations)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw std::invalid_argument("RotationSystem: duplicate ground labels");
  for (int v : ground_) {
    auto it = rotations_.find(v);
    if (it == rotations_.end())
      throw std::invalid_argument("RotationSystem: missing rotation");
    if (it->second.size() != ground_.size() - 1)
      throw std::invalid_argument("RotationSystem: rotation has wrong size");
    for (int w : ground_)
      if (w != v && !it->second.contains(w))
        throw std::invalid_argument("RotationSystem: rotation misses a label");
  }
  if (rotations_.size() != ground_.size())
    throw std::invalid_argument("RotationSystem: rotation for unknown label");
}

RotationSystem RotationSystem::convex(int n) {
  if (n < 3) throw std::invalid_argument("convex: n < 3");
  std::vector<int> ground(n);
  std::map<int, CyclicPerm> rot;
  for (int i = 1; i <= n; ++i) {
    ground[i - 1] = i;
    std::vector<int> seq;
    for (int j = 1; j <= n; ++j)
      if (j != i) seq.push_back(j);
    rot.emplace(i, CyclicPerm(std::move(seq)));
  }
  return RotationSystem(std::move(ground), std::move(rot));
}

RotationSystem RotationSystem::twisted(int n) {
  if (n < 3) throw std::invalid_argument("twisted: n < 3");
  std::vector<int> ground(n);
  std::map<int, CyclicPerm> rot;
  for (int i = 1; i <= n; ++i) {
    ground[i - 1] = i;
    std::vector<int> seq;
    for (int j = i - 1; j >= 1; --j) seq.push_back(j);
    for (int j = i + 1; j <= n; ++j) seq.push_back(j);
    rot.emplace(i, CyclicPerm(std::move(seq)));
  }
  return RotationSystem(std::move(ground), std::move(rot));
}

RotationSystem RotationSystem::from_lists(
    const std::vector<std::vector<int>>& rots) {
  std::vector<int> ground;
  std::map<int, CyclicPerm> rot;
  for (std::size_t i = 0; i < rots.size(); ++i) {
    ground.push_back((int)i + 1);
    rot.emplace((int)i + 1, CyclicPerm(rots[i]));
  }
  return RotationSystem(std::move(ground), std::move(rot));
}

const CyclicPerm& RotationSystem::rotation(int v) const {
  auto it = rotations_.find(v);
  if (it == rotations_.end())
    throw std::out_of_range("RotationSystem: label not in ground");
  return it->second;
}

RotationSystem RotationSystem::restricted(const std::vector<int>& subset) const {
  if (subset.size() < 2)
    throw std::invalid_argument("restrict: need at least 2 labels");
  std::map<int, CyclicPerm> rot;
  for (int v : subset) {
    const CyclicPerm& pv = rotation(v);  // throws if v not in ground
    rot.emplace(v, pv.restricted(subset));
  }
  return RotationSystem(subset, std::move(rot));
}

RotationSystem RotationSystem::reversed() const {
  std::map<int, CyclicPerm> rot;
  for (const auto& [v, p] : rotations_) rot.emplace(v, p.reversed());
  return RotationSystem(ground_, std::move(rot));
}

bool RotationSystem::operator<(const RotationSystem& o) const {
  if (ground_ != o.ground_) return ground_ < o.ground_;
  return rotations_ < o.rotations_;
}

Sign rotation_sign(const RotationSystem& r4, int label) {
  if (r4.size() != 4)
    throw std::invalid_argument("rotation_sign: ground size must be 4");
  const auto& e = r4.rotation(label).elements();  // canonical, starts at min
  return e[1] < e[2] ? Sign::Plus : Sign::Minus;
}

Signature signature(const RotationSystem& r4) {
  if (r4.size() != 4)
    throw std::invalid_argument("signature: ground size must be 4");
  Signature s{};
  for (int i = 0; i < 4; ++i) s.signs[i] = rotation_sign(r4, r4.ground()[i]);
  return s;
}

bool is_realizable4(const RotationSystem& r4) {
  Signature s = signature(r4);
  int neg = 0;
  for (Sign x : s.signs)
    if (x == Sign::Minus) ++neg;
  return neg % 2 == 0;
}

namespace {

// Sign pattern -> (tag, crossing pattern) over sorted positions 0..3.
// Derived once from the straight-line oracle and frozen; the unit tests
// re-derive it geometrically.
struct PatternRow {
  unsigned neg_mask;  // bit p set iff position p negative
  QuadrupleTag tag;
  int cross[4];  // positions {a,b},{c,d}; -1 for no crossing
};

constexpr PatternRow kPatternTable[] = {
    {0b0101, QuadrupleTag::H1, {-1, -1, -1, -1}},   // negatives at 1,3
    {0b1010, QuadrupleTag::H1R, {-1, -1, -1, -1}},  // negatives at 2,4
    {0b1111, QuadrupleTag::H3, {0, 2, 1, 3}},
    {0b0000, QuadrupleTag::H3R, {0, 2, 1, 3}},
    {0b0011, QuadrupleTag::H2R, {0, 3, 1, 2}},      // negatives at 1,2
    {0b1100, QuadrupleTag::H2, {0, 3, 1, 2}},       // negatives at 3,4
    {0b1001, QuadrupleTag::H4, {0, 1, 2, 3}},       // negatives at 1,4
    {0b0110, QuadrupleTag::H4R, {0, 1, 2, 3}},      // negatives at 2,3
};

}  // namespace

QuadrupleClass classify_quadruple(const RotationSystem& r4) {
  Signature s = signature(r4);
  unsigned mask = 0;
  for (int i = 0; i < 4; ++i)
    if (s.signs[i] == Sign::Minus) mask |= 1u << i;
  int neg = __builtin_popcount(mask);
  if (neg % 2 != 0) return {QuadrupleTag::NotRealizable, std::nullopt};
  for (const PatternRow& row : kPatternTable) {
    if (row.neg_mask != mask) continue;
    QuadrupleClass qc{row.tag, std::nullopt};
    if (row.cross[0] >= 0) {
      const auto& g = r4.ground();
      qc.crossing_pair = make_crossing_pair(
          {g[row.cross[0]], g[row.cross[1]]},
          {g[row.cross[2]], g[row.cross[3]]});
    }
    return qc;
  }
  throw std::logic_error("classify_quadruple: unreachable");
}

namespace {

template <typename F>
void for_each_4subset(const std::vector<int>& g, F&& f) {
  int n = (int)g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) f(g[a], g[b], g[c], g[d]);
}

}  // namespace

bool is_good(const RotationSystem& r) {
  if (r.size() < 4) throw std::invalid_argument("is_good: ground size < 4");
  bool good = true;
  for_each_4subset(r.ground(), [&](int a, int b, int c, int d) {
    if (!good) return;
    if (!is_realizable4(r.restricted({a, b, c, d}))) good = false;
  });
  return good;
}

std::set<CrossingPair> crossing_pairs_complete(const RotationSystem& r) {
  if (!is_good(r)) throw std::invalid_argument("crossing_pairs_complete: not good");
  std::set<CrossingPair> out;
  for_each_4subset(r.ground(), [&](int a, int b, int c, int d) {
    QuadrupleClass qc = classify_quadruple(r.restricted({a, b, c, d}));
    if (qc.crossing_pair) out.insert(*qc.crossing_pair);
  });
  return out;
}

const char* to_string(TripleType t) {
  switch (t) {
    case TripleType::T111: return "111";
    case TripleType::T100: return "100";
    case TripleType::T010: return "010";
    case TripleType::T001: return "001";
  }
  return "?";
}

TripleType triple_type(const RotationSystem& r, int base, int i, int j, int k) {
  if (!(base < i && i < j && j < k))
    throw std::invalid_argument("triple_type: need base < i < j < k");
  RotationSystem sub = r.restricted({base, i, j, k});
  if (rotation_sign(sub, base) == Sign::Minus) {
    sub = sub.reversed();
    if (rotation_sign(sub, base) == Sign::Minus)
      throw std::logic_error("triple_type: normalization failed");
  }
  bool ti = rotation_sign(sub, i) == Sign::Plus;
  bool tj = rotation_sign(sub, j) == Sign::Plus;
  bool tk = rotation_sign(sub, k) == Sign::Plus;
  int neg = (int)!ti + (int)!tj + (int)!tk;
  if (neg % 2 != 0)
    throw std::invalid_argument("triple_type: parity violation (system not good)");
  if (ti && tj && tk) return TripleType::T111;
  if (ti) return TripleType::T100;
  if (tj) return TripleType::T010;
  return TripleType::T001;
}

UnavoidableResult find_unavoidable(const RotationSystem& r, int m) {
  int n = (int)r.size();
  if (m > n - 1) throw std::invalid_argument("find_unavoidable: m > n-1");
  if (m < 3) throw std::invalid_argument("find_unavoidable: m < 3");
  int base = r.ground()[0];

  // Normalization: the rotation at the smallest label must be the increasing
  // cycle so that every induced 4-subsystem has a positive rotation at base.
  RotationSystem sys = r;
  auto increasing_at_base = [&](const RotationSystem& s) {
    return std::is_sorted(s.rotation(base).elements().begin(),
                          s.rotation(base).elements().end());
  };
  if (!increasing_at_base(sys)) {
    sys = sys.reversed();
    if (!increasing_at_base(sys))
      throw std::invalid_argument(
          "find_unavoidable: rotation at the smallest label is not an "
          "increasing cycle (even after reversal)");
  }

  std::vector<int> rest(r.ground().begin() + 1, r.ground().end());
  int nr = (int)rest.size();

  // Precompute triple types over rest.
  std::map<std::tuple<int, int, int>, TripleType> types;
  for (int a = 0; a < nr; ++a)
    for (int b = a + 1; b < nr; ++b)
      for (int c = b + 1; c < nr; ++c)
        types[{a, b, c}] = triple_type(sys, base, rest[a], rest[b], rest[c]);

  std::vector<int> idx(m);
  UnavoidableResult found{UnavoidableResult::Kind::None, {}};
  // All m-subsets of rest, lexicographic.
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == m) {
      TripleType t0 = types[{idx[0], idx[1], idx[2]}];
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int c = b + 1; c < m; ++c)
            if (types[{idx[a], idx[b], idx[c]}] != t0) return false;
      std::vector<int> w;
      for (int p : idx) w.push_back(rest[p]);
      bool conv = t0 == TripleType::T111 || t0 == TripleType::T010;
      found = {conv ? UnavoidableResult::Kind::Convex
                    : UnavoidableResult::Kind::Twisted,
               std::move(w)};
      return true;
    }
    for (int s = start; s <= nr - (m - pos); ++s) {
      idx[pos] = s;
      if (pos >= 2) {
        // prune: new element must agree with the shared type so far
        TripleType t0 = types[{idx[0], idx[1], idx[2]}];
        bool ok = true;
        for (int a = 0; a < pos && ok; ++a)
          for (int b = a + 1; b < pos && ok; ++b)
            if (types[{idx[a], idx[b], s}] != t0) ok = false;
        if (!ok) continue;
      }
      if (rec(pos + 1, s + 1)) return true;
    }
    return false;
  };
  rec(0, 0);
  return found;
}

}  // namespace topoglyph
