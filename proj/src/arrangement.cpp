#include "topoglyph/arrangement.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace topoglyph {

std::string Endpoint::str() const {
  return (is_b ? "b" : "a") + std::to_string(label);
}

PerimetricOrder::PerimetricOrder(std::vector<Endpoint> sequence, int cut)
    : sequence_(std::move(sequence)), cut_(cut) {
  if (sequence_.empty() || sequence_.size() % 2 != 0)
    throw std::invalid_argument("perimetric order: 2n endpoints required");
  int n = (int)sequence_.size() / 2;
  std::vector<int> seen_a(n + 1, 0), seen_b(n + 1, 0);
  for (const auto& e : sequence_) {
    if (e.label < 1 || e.label > n)
      throw std::invalid_argument("perimetric order: labels must be 1..n");
    ++(e.is_b ? seen_b : seen_a)[e.label];
  }
  for (int i = 1; i <= n; ++i)
    if (seen_a[i] != 1 || seen_b[i] != 1)
      throw std::invalid_argument(
          "perimetric order: each label needs one a and one b");
  if (cut_ < 0 || cut_ >= (int)sequence_.size())
    throw std::invalid_argument("perimetric order: cut out of range");
}

PerimetricOrder PerimetricOrder::parse(const std::vector<std::string>& symbols,
                                       int cut) {
  std::vector<Endpoint> seq;
  for (const auto& s : symbols) {
    if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b'))
      throw std::invalid_argument("bad endpoint symbol: " + s);
    seq.push_back({std::stoi(s.substr(1)), s[0] == 'b'});
  }
  return PerimetricOrder(std::move(seq), cut);
}

std::vector<Endpoint> PerimetricOrder::linearized() const {
  std::vector<Endpoint> out;
  int m = (int)sequence_.size();
  for (int i = 0; i < m; ++i) out.push_back(sequence_[(cut_ + i) % m]);
  return out;
}

int PerimetricOrder::position(const Endpoint& e) const {
  for (int i = 0; i < (int)sequence_.size(); ++i)
    if (sequence_[i] == e) return i;
  throw std::invalid_argument("endpoint not in order");
}

std::set<std::pair<int, int>> crossing_pairs(const PerimetricOrder& order) {
  int n = order.n();
  std::vector<int> first(n + 1, -1), second(n + 1, -1);
  const auto& seq = order.sequence();
  for (int p = 0; p < (int)seq.size(); ++p)
    (first[seq[p].label] < 0 ? first : second)[seq[p].label] = p;
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int inside = (first[j] > first[i] && first[j] < second[i]) +
                   (second[j] > first[i] && second[j] < second[i]);
      if (inside == 1) out.insert({i, j});
    }
  return out;
}

int total_crossings(const Arrangement& a) {
  int s = 0;
  for (const auto& [i, lst] : a.crossing_orders) s += (int)lst.size();
  return s / 2;
}

namespace {

// Half-edge map of the disc: endpoint vertices on the outer circle joined
// by boundary arcs, plus the chord segments inserted so far.  Plain vectors
// of indices, so states copy freely during enumeration.
struct DiscMap {
  struct Dart {
    int twin, next, from, face;
    int chord;  // -1 for boundary arcs
  };
  std::vector<Dart> darts;
  struct Face {
    int dart;
    bool inner;
  };
  std::vector<Face> faces;
  int num_endpoints = 0;
  int num_vertices = 0;
  std::vector<std::pair<int, int>> crossing_partners;  // per crossing vertex
  std::vector<std::vector<int>> chord_darts;  // label -> darts along a_i..b_i

  static DiscMap initial(int n) {
    DiscMap m;
    int p = 2 * n;
    m.num_endpoints = m.num_vertices = p;
    m.darts.resize(2 * p);
    for (int k = 0; k < p; ++k) {
      // inner arc dart 2k runs from position k to k+1; fixed for good,
      // since chords attach at endpoint vertices and never split arcs
      m.darts[2 * k] = {2 * k + 1, 2 * ((k + 1) % p), k, 1, -1};
      m.darts[2 * k + 1] = {2 * k, 2 * ((k - 1 + p) % p) + 1, (k + 1) % p, 0,
                           -1};
    }
    m.faces = {{1, false}, {0, true}};
    m.chord_darts.resize(n + 1);
    return m;
  }

  std::vector<int> face_cycle(int f) const {
    std::vector<int> out;
    int d0 = faces[f].dart;
    int d = d0;
    do {
      out.push_back(d);
      d = darts[d].next;
    } while (d != d0);
    return out;
  }

  int prev(int d) const {
    int e = d;
    while (darts[e].next != d) e = darts[e].next;
    return e;
  }

  // Unique inner dart leaving an endpoint vertex of degree 2.
  int inner_dart_from(int v) const {
    for (int d = 0; d < (int)darts.size(); ++d)
      if (darts[d].from == v && faces[darts[d].face].inner) return d;
    throw std::logic_error("no inner dart at endpoint");
  }

  // Splits the edge under dart d at a fresh vertex; returns that vertex.
  // Afterwards darts[d].next leaves the new vertex inside d's face and
  // darts[old twin].next leaves it inside the opposite face.
  int split_edge(int d) {
    int t = darts[d].twin;
    int x = num_vertices++;
    int d2 = (int)darts.size();
    int t1 = d2 + 1;
    darts.push_back({t, darts[d].next, x, darts[d].face, darts[d].chord});
    darts.push_back({d, darts[t].next, x, darts[t].face, darts[t].chord});
    darts[d].next = d2;
    darts[t].next = t1;
    darts[d].twin = t1;
    darts[t].twin = d2;
    auto& lst = chord_darts[darts[d].chord];
    for (std::size_t i = 0; i < lst.size(); ++i) {
      if (lst[i] == d) {
        lst.insert(lst.begin() + i + 1, d2);
        break;
      }
      if (lst[i] == t) {
        lst.insert(lst.begin() + i + 1, t1);
        break;
      }
    }
    return x;
  }

  // New chord-segment edge inside the common face of darts da and db, from
  // da's origin to db's origin; splits the face in two.  Returns the dart
  // oriented da-origin -> db-origin.
  int connect(int da, int db, int chord) {
    int f = darts[da].face;
    int pa = prev(da), pb = prev(db);
    int p = (int)darts.size();
    int q = p + 1;
    darts.push_back({q, db, darts[da].from, f, chord});
    darts.push_back({p, da, darts[db].from, f, chord});
    darts[pa].next = p;
    darts[pb].next = q;
    int g = (int)faces.size();
    faces.push_back({q, true});
    for (int d = q;;) {
      darts[d].face = g;
      d = darts[d].next;
      if (d == q) break;
    }
    faces[f].dart = p;
    for (int d = p;;) {
      darts[d].face = f;
      d = darts[d].next;
      if (d == p) break;
    }
    return p;
  }

  // One crossing step of an insertion in progress: cross the segment under
  // dart d (on the current face of da), returning the continuation dart on
  // the far side.
  int cross_step(int chord, int& da, int d) {
    int t = darts[d].twin;
    split_edge(d);
    crossing_partners.push_back({darts[d].chord, chord});
    int p = connect(da, darts[d].next, chord);
    chord_darts[chord].push_back(p);
    return darts[t].next;
  }

  void insert_chord(int chord, const std::vector<int>& path, int a_vertex,
                    int b_vertex) {
    int da = inner_dart_from(a_vertex);
    for (int d : path) da = cross_step(chord, da, d);
    int db = inner_dart_from(b_vertex);
    chord_darts[chord].push_back(connect(da, db, chord));
  }
};

CrossingOrders extract_orders(const DiscMap& m, int n) {
  CrossingOrders out;
  for (int i = 1; i <= n; ++i) {
    auto& lst = out[i];
    const auto& ds = m.chord_darts[i];
    for (std::size_t t = 1; t < ds.size(); ++t) {
      int v = m.darts[ds[t]].from - m.num_endpoints;
      auto [x, y] = m.crossing_partners[v];
      lst.push_back(x == i ? y : x);
    }
  }
  return out;
}

// Simple dual-face paths from the face at a_vertex to the face at b_vertex
// crossing each required chord exactly once and nothing else.
std::vector<std::vector<int>> enumerate_paths(const DiscMap& m, int a_vertex,
                                              int b_vertex,
                                              const std::set<int>& required) {
  int fa = m.darts[m.inner_dart_from(a_vertex)].face;
  int fb = m.darts[m.inner_dart_from(b_vertex)].face;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::set<int> crossed, visited{fa};
  std::function<void(int)> dfs = [&](int f) {
    if (f == fb) {
      if (crossed.size() == required.size()) out.push_back(path);
      return;  // a simple path through fb can never come back
    }
    for (int d : m.face_cycle(f)) {
      int c = m.darts[d].chord;
      if (c < 0 || !required.count(c) || crossed.count(c)) continue;
      int g = m.darts[m.darts[d].twin].face;
      if (visited.count(g)) continue;
      visited.insert(g);
      crossed.insert(c);
      path.push_back(d);
      dfs(g);
      path.pop_back();
      crossed.erase(c);
      visited.erase(g);
    }
  };
  dfs(fa);
  return out;
}

struct OrderIndex {
  int n;
  std::vector<int> a_pos, b_pos;  // stored-sequence positions per label

  explicit OrderIndex(const PerimetricOrder& order) : n(order.n()) {
    a_pos.assign(n + 1, 0);
    b_pos.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      a_pos[i] = order.position({i, false});
      b_pos[i] = order.position({i, true});
    }
  }
};

bool structurally_consistent(const Arrangement& a) {
  int n = a.order.n();
  if ((int)a.crossing_orders.size() != n) return false;
  std::set<std::pair<int, int>> listed;
  for (const auto& [i, lst] : a.crossing_orders) {
    if (i < 1 || i > n) return false;
    std::set<int> seen;
    for (int j : lst) {
      if (j < 1 || j > n || j == i || !seen.insert(j).second) return false;
      const auto it = a.crossing_orders.find(j);
      if (it == a.crossing_orders.end() ||
          std::count(it->second.begin(), it->second.end(), i) != 1)
        return false;
      listed.insert(std::minmax(i, j));
    }
  }
  return listed == crossing_pairs(a.order);
}

// Inserts the chords one by one following the prescribed crossing orders.
// The face walk of a pseudochord between consecutive crossings stays in one
// cell, so the insertion is forced; any mismatch means unrealizable.
std::optional<DiscMap> build_map(const Arrangement& a) {
  if (!structurally_consistent(a)) return std::nullopt;
  OrderIndex idx(a.order);
  DiscMap m = DiscMap::initial(idx.n);
  for (int i = 1; i <= idx.n; ++i) {
    int da = m.inner_dart_from(idx.a_pos[i]);
    for (int j : a.crossing_orders.at(i)) {
      if (j > i) continue;  // not inserted yet; handled when j arrives
      // segment of j carrying this crossing: position of i among the
      // crossings of j already present
      const auto& oj = a.crossing_orders.at(j);
      int seg = 0;
      for (int x : oj) {
        if (x == i) break;
        if (x < i) ++seg;
      }
      int d = m.chord_darts[j][seg];
      if (m.darts[d].face != m.darts[da].face) d = m.darts[d].twin;
      if (m.darts[d].face != m.darts[da].face) return std::nullopt;
      da = m.cross_step(i, da, d);
    }
    int db = m.inner_dart_from(idx.b_pos[i]);
    if (m.darts[db].face != m.darts[da].face) return std::nullopt;
    m.chord_darts[i].push_back(m.connect(da, db, i));
  }
  return m;
}

}  // namespace

bool is_valid(const Arrangement& a) { return build_map(a).has_value(); }

std::vector<Arrangement> enumerate_classes(const PerimetricOrder& order,
                                           int workers, int n_limit) {
  int n = order.n();
  if (n > n_limit)
    throw std::invalid_argument("enumerate_classes: n above configured limit");
  OrderIndex idx(order);
  auto pairs = crossing_pairs(order);
  std::vector<std::set<int>> required(n + 1);
  for (auto [i, j] : pairs) required[j].insert(i);

  std::function<void(DiscMap, int, std::set<CrossingOrders>&)> finish =
      [&](DiscMap m, int chord, std::set<CrossingOrders>& out) {
        if (chord > n) {
          out.insert(extract_orders(m, n));
          return;
        }
        auto paths = enumerate_paths(m, idx.a_pos[chord], idx.b_pos[chord],
                                     required[chord]);
        for (const auto& path : paths) {
          DiscMap next = m;
          next.insert_chord(chord, path, idx.a_pos[chord], idx.b_pos[chord]);
          finish(std::move(next), chord + 1, out);
        }
      };

  // breadth-first for a few levels so parallel work has enough tasks
  std::vector<DiscMap> frontier{DiscMap::initial(n)};
  int first_unplaced = 1;
  while (workers > 1 && first_unplaced <= n &&
         (int)frontier.size() < 4 * workers) {
    std::vector<DiscMap> next_frontier;
    for (auto& m : frontier) {
      auto paths = enumerate_paths(m, idx.a_pos[first_unplaced],
                                   idx.b_pos[first_unplaced],
                                   required[first_unplaced]);
      for (const auto& path : paths) {
        DiscMap next = m;
        next.insert_chord(first_unplaced, path, idx.a_pos[first_unplaced],
                          idx.b_pos[first_unplaced]);
        next_frontier.push_back(std::move(next));
      }
    }
    frontier = std::move(next_frontier);
    ++first_unplaced;
  }

  std::set<CrossingOrders> classes;
  if (workers <= 1 || frontier.size() <= 1) {
    for (auto& m : frontier) finish(std::move(m), first_unplaced, classes);
  } else {
    std::vector<std::set<CrossingOrders>> partial(frontier.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= frontier.size()) break;
        finish(frontier[t], first_unplaced, partial[t]);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& p : partial) classes.merge(p);
  }

  std::vector<Arrangement> out;
  for (const auto& co : classes) out.push_back({order, co});
  return out;
}

std::vector<PerimetricOrder> all_perimetric_orders(int n) {
  std::vector<PerimetricOrder> out;
  std::vector<int> partner(2 * n, -1);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int p = 0; p < 2 * n; ++p)
      if (partner[p] < 0) {
        first = p;
        break;
      }
    if (first < 0) {
      std::vector<Endpoint> seq(2 * n);
      int label = 0;
      for (int p = 0; p < 2 * n; ++p)
        if (partner[p] > p) {
          ++label;
          seq[p] = {label, false};
          seq[partner[p]] = {label, true};
        }
      out.emplace_back(seq, 0);
      return;
    }
    for (int q = first + 1; q < 2 * n; ++q) {
      if (partner[q] >= 0) continue;
      partner[first] = q;
      partner[q] = first;
      rec();
      partner[first] = partner[q] = -1;
    }
  };
  rec();
  return out;
}

namespace {

// Left endpoint of each chord after unfolding at the cut: whichever of its
// two endpoints comes first in the linearization.
struct Unfolded {
  std::vector<int> left_pos;   // per label, position in the linearization
  std::vector<bool> left_is_b;

  Unfolded(const PerimetricOrder& order) {
    int n = order.n();
    left_pos.assign(n + 1, -1);
    left_is_b.assign(n + 1, false);
    auto lin = order.linearized();
    for (int p = 0; p < (int)lin.size(); ++p)
      if (left_pos[lin[p].label] < 0) {
        left_pos[lin[p].label] = p;
        left_is_b[lin[p].label] = lin[p].is_b;
      }
  }
};

}  // namespace

AlphaCode encode(const Arrangement& a) {
  Unfolded u(a.order);
  AlphaCode code;
  for (const auto& [i, lst] : a.crossing_orders) {
    std::vector<int> along = lst;  // from the left endpoint of i
    if (u.left_is_b[i]) std::reverse(along.begin(), along.end());
    auto& bits = code.bits[i];
    for (int j : along) bits.push_back(u.left_pos[i] < u.left_pos[j] ? 1 : 0);
  }
  return code;
}

Arrangement decode(const PerimetricOrder& order, const AlphaCode& code) {
  int n = order.n();
  auto pairs = crossing_pairs(order);
  std::vector<int> degree(n + 1, 0);
  for (auto [i, j] : pairs) {
    ++degree[i];
    ++degree[j];
  }
  if ((int)code.bits.size() != n) throw InvalidCode("wrong label set");
  for (const auto& [i, bits] : code.bits) {
    if (i < 1 || i > n || (int)bits.size() != degree[i])
      throw InvalidCode("bit length does not match interleaving degree");
    for (int b : bits)
      if (b != 0 && b != 1) throw InvalidCode("non-binary entry");
  }

  Unfolded u(order);
  std::vector<Endpoint> seq = order.linearized();
  std::vector<std::vector<int>> alpha(n + 1);
  std::vector<int> cursor(n + 1, 0);
  for (const auto& [i, bits] : code.bits) alpha[i] = bits;
  std::vector<std::vector<int>> along(n + 1);  // orders from left endpoints
  std::vector<bool> present(n + 1, true);

  auto remaining_bits = [&](int i) {
    return (int)alpha[i].size() - cursor[i];
  };
  auto interleave_in_seq = [&](int i, int j) {
    std::vector<int> pos_i, pos_j;
    for (int p = 0; p < (int)seq.size(); ++p) {
      if (seq[p].label == i) pos_i.push_back(p);
      if (seq[p].label == j) pos_j.push_back(p);
    }
    int inside = (pos_j[0] > pos_i[0] && pos_j[0] < pos_i[1]) +
                 (pos_j[1] > pos_i[0] && pos_j[1] < pos_i[1]);
    return inside == 1;
  };

  int active = n;
  while (active > 0) {
    // peel chords that cross nothing: nothing may interleave them
    int empty = 0;
    for (int i = 1; i <= n && !empty; ++i)
      if (present[i] && remaining_bits(i) == 0) empty = i;
    if (empty) {
      for (int j = 1; j <= n; ++j)
        if (present[j] && j != empty && interleave_in_seq(empty, j))
          throw InvalidCode("crossing-free chord is interleaved");
      std::erase_if(seq, [&](const Endpoint& e) { return e.label == empty; });
      present[empty] = false;
      --active;
      continue;
    }

    // chords by current left endpoint position
    std::vector<int> lefts;
    std::vector<bool> seen(n + 1, false);
    std::vector<int> first_at(n + 1, -1);
    for (int p = 0; p < (int)seq.size(); ++p)
      if (!seen[seq[p].label]) {
        seen[seq[p].label] = true;
        first_at[seq[p].label] = p;
        lefts.push_back(seq[p].label);
      }
    int s = -1;
    for (int t = 0; t + 1 < (int)lefts.size(); ++t) {
      int i = lefts[t], j = lefts[t + 1];
      if (alpha[i][cursor[i]] != 1 || alpha[j][cursor[j]] != 0) continue;
      // their first crossing is mutual: the left ends must be adjacent and
      // the chords must interleave
      if (first_at[j] != first_at[i] + 1) continue;
      if (!interleave_in_seq(i, j)) continue;
      s = t;
      break;
    }
    if (s < 0) throw InvalidCode("no reducible pair of left endpoints");
    int i = lefts[s], j = lefts[s + 1];
    along[i].push_back(j);
    along[j].push_back(i);
    ++cursor[i];
    ++cursor[j];
    std::swap(seq[first_at[i]], seq[first_at[j]]);
  }

  Arrangement a;
  a.order = order;
  for (int i = 1; i <= n; ++i) {
    auto lst = along[i];
    if (u.left_is_b[i]) std::reverse(lst.begin(), lst.end());
    a.crossing_orders[i] = std::move(lst);
  }
  if (!is_valid(a)) throw InvalidCode("reconstruction is not realizable");
  if (encode(a) != code) throw InvalidCode("not in the image of encode");
  return a;
}

DualMap dual_quadrangulation(const Arrangement& a) {
  auto mo = build_map(a);
  if (!mo) throw std::invalid_argument("inconsistent arrangement");
  const DiscMap& m = *mo;
  int n = a.order.n();
  int p = 2 * n;

  DualMap d;
  d.n = n;
  d.k = total_crossings(a);
  d.external_count = p;
  std::vector<int> cell_id(m.faces.size(), -1);
  for (int f = 0; f < (int)m.faces.size(); ++f)
    if (m.faces[f].inner) cell_id[f] = p + d.internal_count++;

  auto cell_of = [&](int dart) { return cell_id[m.darts[dart].face]; };

  for (int dd = 0; dd < (int)m.darts.size(); ++dd)
    if (m.darts[dd].chord >= 0 && dd < m.darts[dd].twin)
      d.edges.push_back({cell_of(dd), cell_of(m.darts[dd].twin)});
  for (int k = 0; k < p; ++k) {
    d.edges.push_back({k, cell_of(2 * k)});
    d.edges.push_back({k, (k + 1) % p});
  }

  // one inner dual face per primal vertex
  for (int v = 0; v < p; ++v)
    d.inner_faces.push_back({(v - 1 + p) % p, cell_of(2 * ((v - 1 + p) % p)),
                             cell_of(2 * v), v});
  for (int v = p; v < m.num_vertices; ++v) {
    int d0 = -1;
    for (int dd = 0; dd < (int)m.darts.size() && d0 < 0; ++dd)
      if (m.darts[dd].from == v) d0 = dd;
    std::vector<int> face;
    for (int dd = d0, t = 0; t < 4; ++t) {
      face.push_back(cell_of(dd));
      dd = m.darts[m.darts[dd].twin].next;
    }
    d.inner_faces.push_back(std::move(face));
  }
  for (int k = 0; k < p; ++k) d.outer_face.push_back(k);
  return d;
}

bool inner_faces_are_quadrilaterals(const DualMap& d) {
  for (const auto& f : d.inner_faces) {
    if (f.size() != 4) return false;
    std::set<int> distinct(f.begin(), f.end());
    if (distinct.size() != 4) return false;
  }
  return true;
}

bool has_separating_four_cycle(const DualMap& d) {
  int nv = d.external_count + d.internal_count;
  std::vector<std::set<int>> adj(nv);
  for (auto [u, v] : d.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  auto separates = [&](int a, int b, int c, int e) {
    std::vector<bool> banned(nv, false), seen(nv, false);
    banned[a] = banned[b] = banned[c] = banned[e] = true;
    int components = 0;
    for (int v = 0; v < nv; ++v) {
      if (banned[v] || seen[v]) continue;
      ++components;
      std::vector<int> stack{v};
      seen[v] = true;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (!banned[y] && !seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
      }
    }
    return components >= 2;
  };
  // 4-cycles u-w1-v-w2 via common neighbors of the diagonal pair (u, v).
  // A cycle touching the disc boundary never counts as separating, so only
  // cycles through internal (cell) vertices are considered.
  for (int u = d.external_count; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) {
      std::vector<int> common;
      for (int w : adj[u])
        if (w >= d.external_count && adj[v].count(w)) common.push_back(w);
      for (std::size_t x = 0; x < common.size(); ++x)
        for (std::size_t y = x + 1; y < common.size(); ++y)
          if (separates(u, common[x], v, common[y])) return true;
    }
  return false;
}

PrimalStats primal_stats(const Arrangement& a) {
  auto mo = build_map(a);
  if (!mo) throw std::invalid_argument("inconsistent arrangement");
  const DiscMap& m = *mo;
  PrimalStats s;
  s.vertices = m.num_vertices;
  s.edges = (int)m.darts.size() / 2;
  std::vector<bool> seen(m.darts.size(), false);
  for (int d0 = 0; d0 < (int)m.darts.size(); ++d0) {
    if (seen[d0]) continue;
    ++s.faces;
    for (int d = d0; !seen[d]; d = m.darts[d].next) seen[d] = true;
  }
  return s;
}

}  // namespace topoglyph
