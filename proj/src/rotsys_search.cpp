#include "topoglyph/rotsys_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

namespace topoglyph {

namespace {

using Clock = std::chrono::steady_clock;

// Rotation of label v held as the cyclic sequence starting at its smallest
// element, plus an index-of-label table for O(1) position lookups.
struct Rot {
  std::vector<int> seq;
  std::vector<int> pos;  // pos[label] = index in seq, -1 if absent

  void set(const std::vector<int>& s, int max_label) {
    seq = s;
    pos.assign(max_label + 1, -1);
    for (int i = 0; i < (int)seq.size(); ++i) pos[seq[i]] = i;
  }
};

// Sign of the rotation at l restricted to x1 < x2 < x3: positive iff the
// cyclic order is (x1, x2, x3).
inline bool negative_at(const Rot& r, int x1, int x2, int x3) {
  int p1 = r.pos[x1], p2 = r.pos[x2], p3 = r.pos[x3];
  // cyclic order starting at x1 is (x1,x2,x3) iff p2 lies in the cyclic
  // interval (p1, p3)
  auto cyclic_lt = [&](int a, int b) {
    // position b after position a, before wrapping past p1
    int da = (a - p1 + (int)r.seq.size()) % (int)r.seq.size();
    int db = (b - p1 + (int)r.seq.size()) % (int)r.seq.size();
    return da < db;
  };
  return !cyclic_lt(p2, p3);
}

// Parity of the quadruple a<b<c<d over the four rotations.
inline bool quad_realizable(const std::vector<Rot>& rot, int a, int b, int c,
                            int d) {
  int neg = 0;
  if (negative_at(rot[a], b, c, d)) ++neg;
  if (negative_at(rot[b], a, c, d)) ++neg;
  if (negative_at(rot[c], a, b, d)) ++neg;
  if (negative_at(rot[d], a, b, c)) ++neg;
  return neg % 2 == 0;
}

struct Budget {
  std::uint64_t node_budget;
  Clock::time_point deadline;
  bool has_deadline;

  explicit Budget(const SearchOptions& o)
      : node_budget(o.node_budget),
        deadline(Clock::now() + o.time_budget),
        has_deadline(o.time_budget.count() > 0) {}

  void check(std::uint64_t nodes) const {
    if (node_budget && nodes > node_budget)
      throw BudgetExceeded("node budget exceeded");
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline)
      throw BudgetExceeded("time budget exceeded");
  }
};

RotationSystem to_system(const std::vector<Rot>& rot, int n) {
  std::vector<std::vector<int>> lists;
  for (int v = 1; v <= n; ++v) lists.push_back(rot[v].seq);
  return RotationSystem::from_lists(lists);
}

std::vector<std::vector<int>> all_rotation_seqs(int n, int v) {
  // All cyclic (n-1)-permutations of {1..n} \ {v}, canonical start first.
  std::vector<int> others;
  for (int w = 1; w <= n; ++w)
    if (w != v) others.push_back(w);
  std::vector<std::vector<int>> out;
  std::vector<int> tail(others.begin() + 1, others.end());
  std::sort(tail.begin(), tail.end());
  do {
    std::vector<int> seq{others[0]};
    seq.insert(seq.end(), tail.begin(), tail.end());
    out.push_back(std::move(seq));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

struct RootResult {
  BigInt count = 0;
  std::vector<RotationSystem> witnesses;
  std::uint64_t nodes = 0;
  std::exception_ptr error;
};

// Runs fn(i) for i in [0, tasks) on a pool, collecting results in index
// order so aggregation does not depend on the schedule.
template <typename Fn>
std::vector<RootResult> run_pool(int tasks, int workers, Fn&& fn) {
  std::vector<RootResult> results(tasks);
  if (workers <= 1) {
    for (int i = 0; i < tasks; ++i) fn(i, results[i]);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= tasks) break;
      try {
        fn(i, results[i]);
      } catch (...) {
        results[i].error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

SearchReport enumerate_good(int n, const SearchOptions& opts) {
  if (n < 4) throw std::invalid_argument("enumerate_good: n >= 4 required");
  if (n > opts.n_limit)
    throw std::invalid_argument("enumerate_good: n above configured limit");
  auto start = Clock::now();
  Budget budget(opts);

  auto rots1 = all_rotation_seqs(n, 1);
  auto rots2 = all_rotation_seqs(n, 2);
  int tasks = (int)(rots1.size() * rots2.size());

  auto run_root = [&](int root, RootResult& res) {
    std::vector<Rot> rot(n + 1);
    rot[1].set(rots1[root / (int)rots2.size()], n);
    rot[2].set(rots2[root % (int)rots2.size()], n);
    res.nodes = 2;

    std::vector<std::vector<std::vector<int>>> cand(n + 1);
    for (int v = 3; v <= n; ++v) cand[v] = all_rotation_seqs(n, v);

    std::function<void(int)> dfs = [&](int v) {
      if (v > n) {
        res.count += 1;
        if (res.witnesses.size() < opts.max_witnesses)
          res.witnesses.push_back(to_system(rot, n));
        return;
      }
      for (const auto& seq : cand[v]) {
        ++res.nodes;
        budget.check(res.nodes);
        rot[v].set(seq, n);
        bool ok = true;
        for (int a = 1; a < v && ok; ++a)
          for (int b = a + 1; b < v && ok; ++b)
            for (int c = b + 1; c < v && ok; ++c)
              if (!quad_realizable(rot, a, b, c, v)) ok = false;
        if (ok) dfs(v + 1);
      }
    };
    dfs(3);
  };

  auto results = run_pool(tasks, opts.workers, [&](int i, RootResult& r) {
    run_root(i, r);
  });

  SearchReport report;
  for (auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    report.count += r.count;
    report.nodes_explored += r.nodes;
    for (auto& w : r.witnesses)
      if (report.witnesses.size() < opts.max_witnesses)
        report.witnesses.push_back(w);
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

namespace {

// Insertion search shared by extend_good and the targeted single-rotation
// query.  Returns the number of good completions (stops at 1 when
// first_only), with the rotation of the new element t fixed.
BigInt count_completions(const RotationSystem& r, int n,
                         const std::vector<int>& rot_t, bool first_only,
                         std::uint64_t& nodes, const Budget& budget,
                         std::vector<RotationSystem>* witnesses,
                         std::size_t max_witnesses) {
  int t = n + 1;
  std::vector<Rot> rot(t + 1);
  rot[t].set(rot_t, t);
  std::vector<std::vector<int>> base(n + 1);
  for (int v = 1; v <= n; ++v) base[v] = r.rotation(v).elements();

  BigInt count = 0;
  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (v > n) {
      count += 1;
      if (witnesses && witnesses->size() < max_witnesses)
        witnesses->push_back(to_system(rot, t));
      return first_only;
    }
    // insert t after position p-1 of the canonical sequence (p >= 1 keeps
    // the canonical start; t is the largest label so the start is stable)
    std::vector<int> seq(base[v].size() + 1);
    for (int p = 1; p <= (int)base[v].size(); ++p) {
      ++nodes;
      budget.check(nodes);
      std::copy(base[v].begin(), base[v].begin() + p, seq.begin());
      seq[p] = t;
      std::copy(base[v].begin() + p, base[v].end(), seq.begin() + p + 1);
      rot[v].set(seq, t);
      bool ok = true;
      for (int a = 1; a < v && ok; ++a)
        for (int b = a + 1; b < v && ok; ++b)
          if (!quad_realizable(rot, a, b, v, t)) ok = false;
      if (ok && dfs(v + 1)) return true;
    }
    return false;
  };
  dfs(1);
  return count;
}

}  // namespace

ExtendReport extend_good(const RotationSystem& r, const SearchOptions& opts) {
  int n = (int)r.size();
  for (int i = 0; i < n; ++i)
    if (r.ground()[i] != i + 1)
      throw std::invalid_argument("extend_good: ground must be 1..n");
  auto start = Clock::now();
  Budget budget(opts);

  auto rots_t = all_rotation_seqs(n + 1, n + 1);
  auto results =
      run_pool((int)rots_t.size(), opts.workers, [&](int i, RootResult& res) {
        res.count = count_completions(r, n, rots_t[i], /*first_only=*/false,
                                      res.nodes, budget, &res.witnesses,
                                      opts.max_witnesses);
      });

  ExtendReport report;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& res = results[i];
    if (res.error) std::rethrow_exception(res.error);
    report.count += res.count;
    report.nodes_explored += res.nodes;
    if (res.count > 0) report.allowed_rotations.push_back(CyclicPerm(rots_t[i]));
    for (auto& w : res.witnesses)
      if (report.witnesses.size() < opts.max_witnesses)
        report.witnesses.push_back(w);
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

bool extension_exists_with_rotation(const RotationSystem& r,
                                    const CyclicPerm& new_rotation,
                                    std::uint64_t* nodes) {
  int n = (int)r.size();
  SearchOptions opts;
  Budget budget(opts);
  std::uint64_t local = 0;
  BigInt c = count_completions(r, n, new_rotation.elements(), /*first_only=*/true,
                               local, budget, nullptr, 0);
  if (nodes) *nodes = local;
  return c > 0;
}

}  // namespace topoglyph
