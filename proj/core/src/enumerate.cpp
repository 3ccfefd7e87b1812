#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "gallai/subdivision.hpp"

namespace gallai {

namespace {

// Subset dynamic programmes use 32-bit masks; beyond this order the searches
// fall back to pure branch and bound.
constexpr int kSubsetDpLimit = 20;

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void tick(std::uint64_t k = 1) {
    const auto before = used_.fetch_add(k, std::memory_order_relaxed);
    if (before + k > limit_) throw BudgetExceeded(before + k, best());
  }
  void offer(int value) {
    int cur = best_.load(std::memory_order_relaxed);
    while (value > cur && !best_.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
  }
  int best_raw() const { return best_.load(std::memory_order_relaxed); }
  std::optional<int> best() const {
    const int b = best_raw();
    return b < 0 ? std::nullopt : std::optional<int>(b);
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::uint64_t limit_;
  std::atomic<int> best_{-1};
};

template <typename Work>
void for_each_start(int n, int jobs, Work&& work) {
  if (jobs <= 1 || n <= 1) {
    for (Vertex v = 0; v < n; ++v) work(v);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int v; (v = next.fetch_add(1)) < n;) work(v);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct MemberKey {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  friend auto operator<=>(const MemberKey&, const MemberKey&) = default;
};

MemberKey key_of(const Subdivision& s, int universe) {
  return {s.vertex_set(universe).to_vector(), s.edge_set()};
}

// Sorts members canonically and derives vertex_sets / representatives from them.
void finish_from_members(SubdivisionFamily& fam, std::map<MemberKey, Subdivision> found, const EnumerationOptions& options) {
  fam.members.clear();
  fam.vertex_sets.clear();
  fam.representatives.clear();
  for (auto& [key, sub] : found) {
    VertexSet vs(fam.universe, key.vertices);
    if (fam.vertex_sets.empty() || !(fam.vertex_sets.back() == vs)) {
      fam.vertex_sets.push_back(vs);
      fam.representatives.push_back(sub);
    }
    fam.members.push_back(std::move(sub));
  }
  if (options.limit && fam.members.size() > *options.limit) {
    fam.members.resize(*options.limit);
    fam.members_truncated = true;
  }
  if (!fam.vertex_sets.empty()) {
    fam.status = FamilyStatus::nonempty;
    fam.mu = fam.representatives.front().vertex_count();
    fam.edge_size = fam.representatives.front().edge_count();
  }
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    masks[e.u] |= 1U << e.v;
    masks[e.v] |= 1U << e.u;
  }
  return masks;
}

VertexSet mask_to_set(int n, std::uint32_t mask) {
  VertexSet s(n);
  while (mask) {
    s.insert(__builtin_ctz(mask));
    mask &= mask - 1;
  }
  return s;
}

int reach_count(const Graph& g, Vertex from, const VertexSet& blocked) {
  // Vertices reachable from `from` through unblocked vertices (excluding `from`).
  VertexSet seen(g.order());
  std::vector<Vertex> stack{from};
  int count = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (blocked.contains(w) || seen.contains(w)) continue;
      seen.insert(w);
      ++count;
      stack.push_back(w);
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Longest paths

struct PathSearch {
  const Graph& g;
  Budget& budget;
  int target = -1;  // vertex count to collect, or -1 for branch and bound
  std::size_t cap = SIZE_MAX;
  int local_best = -1;
  std::vector<std::vector<Vertex>> found;

  void run(Vertex start) {
    std::vector<Vertex> path{start};
    VertexSet visited(g.order(), {start});
    extend(path, visited);
  }

  void extend(std::vector<Vertex>& path, VertexSet& visited) {
    if (found.size() >= cap && target >= 0) return;
    budget.tick();
    const int len = static_cast<int>(path.size());
    if (target >= 0) {
      if (len == target) {
        if (path.front() < path.back()) found.push_back(path);
        return;
      }
      if (len + reach_count(g, path.back(), visited) < target) return;
    } else {
      const int best = std::max(local_best, budget.best_raw() + 1);
      if (len + reach_count(g, path.back(), visited) < best) return;
      if (len > 1 && path.front() < path.back()) {
        if (len > local_best) {
          local_best = len;
          found.clear();
          budget.offer(len - 1);
        }
        if (len == local_best) found.push_back(path);
      }
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (visited.contains(w)) continue;
      visited.insert(w);
      path.push_back(w);
      extend(path, visited);
      path.pop_back();
      visited.erase(w);
    }
  }
};

// Hamiltonian paths of G[set] read backwards off the end table: ends[T] holds
// the possible last vertices of a Hamiltonian path of G[T]. Every branch
// completes, so the cost is linear in the output. `first` restricts the last
// vertex. visit(seq) gets last-to-first order and returns false to stop.
template <typename Visit>
bool walk_dp_paths(const std::vector<std::uint32_t>& ends, const std::vector<std::uint32_t>& adj, std::uint32_t set,
                   std::uint32_t first, Budget& budget, std::vector<Vertex>& seq, Visit&& visit) {
  budget.tick();
  // high vertices first: with a large last vertex nearly every completion
  // already has the wanted orientation (first < last)
  std::uint32_t cand = ends[set] & first;
  while (cand) {
    const Vertex v = 31 - __builtin_clz(cand);
    cand &= ~(1U << v);
    seq.push_back(v);
    const std::uint32_t rest = set & ~(1U << v);
    const bool go = rest == 0 ? visit(seq) : walk_dp_paths(ends, adj, rest, adj[v], budget, seq, visit);
    seq.pop_back();
    if (!go) return false;
  }
  return true;
}

MultigraphPattern k2_pattern() { return MultigraphPattern(2, {{0, 1}}, "K2"); }
MultigraphPattern c1_pattern() { return MultigraphPattern(1, {{0, 0}}, "C1"); }

SubdivisionFamily longest_paths_impl(const Graph& g, const EnumerationOptions& options, Budget& budget) {
  const int n = g.order();
  SubdivisionFamily fam{k2_pattern()};
  fam.universe = n;

  if (g.size() == 0) {
    // Every longest path is a single vertex.
    std::map<MemberKey, Subdivision> found;
    for (Vertex v = 0; v < n; ++v) {
      Subdivision s = path_subdivision({v});
      found.emplace(key_of(s, n), s);
    }
    finish_from_members(fam, std::move(found), options);
    return fam;
  }

  std::map<MemberKey, Subdivision> found;
  if (n <= kSubsetDpLimit) {
    const auto adj = adjacency_masks(g);
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (Vertex v = 0; v < n; ++v) ends[1U << v] = 1U << v;
    int best = 1;
    for (std::uint32_t set = 1; set < ends.size(); ++set) {
      std::uint32_t e = ends[set];
      if (!e) continue;
      budget.tick();
      best = std::max(best, __builtin_popcount(set));
      while (e) {
        const int v = __builtin_ctz(e);
        e &= e - 1;
        std::uint32_t ext = adj[v] & ~set;
        while (ext) {
          const int w = __builtin_ctz(ext);
          ext &= ext - 1;
          ends[set | (1U << w)] |= 1U << w;
        }
      }
    }
    budget.offer(best - 1);
    std::vector<std::uint32_t> sets;
    for (std::uint32_t set = 1; set < ends.size(); ++set)
      if (ends[set] && __builtin_popcount(set) == best) sets.push_back(set);
    const std::size_t cap = options.limit.value_or(SIZE_MAX);
    std::vector<std::pair<VertexSet, Subdivision>> reps;
    std::vector<Vertex> seq;
    for (auto set : sets) {
      std::optional<Subdivision> rep;
      // sequences come out last-vertex first; keep the orientation with front < back
      walk_dp_paths(ends, adj, set, ~0U, budget, seq, [&](const std::vector<Vertex>& back) {
        if (back.back() > back.front()) return true;
        Subdivision sub = path_subdivision({back.rbegin(), back.rend()});
        if (!rep) rep = sub;
        if (found.size() <= cap) found.emplace(key_of(sub, n), std::move(sub));
        return found.size() <= cap;
      });
      reps.emplace_back(mask_to_set(n, set), std::move(*rep));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [vs, rep] : reps) {
      fam.vertex_sets.push_back(vs);
      fam.representatives.push_back(std::move(rep));
    }
    fam.status = FamilyStatus::nonempty;
    fam.mu = best;
    fam.edge_size = best - 1;

    // at most cap + 1 are collected, so overflow shows up in the total
    for (auto& [key, sub] : found) fam.members.push_back(std::move(sub));
    if (fam.members.size() > cap) {
      fam.members_truncated = true;
      fam.members.resize(cap);
    }
    return fam;
  }

  std::vector<std::vector<std::vector<Vertex>>> per_start(static_cast<std::size_t>(n));
  std::vector<int> per_best(static_cast<std::size_t>(n), -1);
  for_each_start(n, options.jobs, [&](Vertex s) {
    PathSearch search{g, budget};
    search.run(s);
    per_best[s] = search.local_best;
    per_start[s] = std::move(search.found);
  });
  const int best = *std::max_element(per_best.begin(), per_best.end());
  for (Vertex s = 0; s < n; ++s) {
    if (per_best[s] != best) continue;
    for (auto& p : per_start[s]) {
      Subdivision sub = path_subdivision(std::move(p));
      found.emplace(key_of(sub, n), std::move(sub));
    }
  }
  finish_from_members(fam, std::move(found), options);
  return fam;
}

// ---------------------------------------------------------------------------
// Longest cycles

struct CycleSearch {
  const Graph& g;
  Budget& budget;
  int target = -1;
  std::size_t cap = SIZE_MAX;
  int local_best = -1;
  std::vector<std::vector<Vertex>> found;
  VertexSet below;  // vertices < start, never used

  void run(Vertex start) {
    below = VertexSet(g.order());
    for (Vertex v = 0; v < start; ++v) below.insert(v);
    std::vector<Vertex> path{start};
    VertexSet visited = below;
    visited.insert(start);
    extend(path, visited);
  }

  void extend(std::vector<Vertex>& path, VertexSet& visited) {
    if (target >= 0 && found.size() >= cap) return;
    budget.tick();
    const int len = static_cast<int>(path.size());
    const Vertex start = path.front();
    const Vertex tip = path.back();
    const bool closes = len >= 3 && g.adjacent(tip, start) && path[1] < tip;
    if (target >= 0) {
      if (len == target) {
        if (closes) found.push_back(path);
        return;
      }
      if (len + reach_count(g, tip, visited) < target) return;
    } else {
      const int best = std::max(local_best, budget.best_raw());
      if (len + reach_count(g, tip, visited) < best) return;
      if (closes) {
        if (len > local_best) {
          local_best = len;
          found.clear();
          budget.offer(len);
        }
        if (len == local_best) found.push_back(path);
      }
    }
    for (Vertex w : g.neighbors(tip)) {
      if (visited.contains(w)) continue;
      visited.insert(w);
      path.push_back(w);
      extend(path, visited);
      path.pop_back();
      visited.erase(w);
    }
  }
};

// Path table over the vertices above s (bit i = vertex s+1+i) for paths that
// start at a neighbour of s. Returns the neighbours of s in relative bits.
std::uint32_t fill_cycle_table(const std::vector<std::uint32_t>& adj, int n, Vertex s, std::vector<std::uint32_t>& ends,
                               std::vector<std::uint32_t>& rel_adj, Budget& budget) {
  const int r = n - 1 - s;
  ends.assign(std::size_t{1} << r, 0);
  rel_adj.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) rel_adj[i] = adj[i + s + 1] >> (s + 1);
  const std::uint32_t s_nbrs = adj[s] >> (s + 1);
  for (int i = 0; i < r; ++i)
    if (s_nbrs & (1U << i)) ends[1U << i] |= 1U << i;
  for (std::uint32_t set = 1; set < ends.size(); ++set) {
    std::uint32_t e = ends[set];
    if (!e) continue;
    budget.tick();
    while (e) {
      const int v = __builtin_ctz(e);
      e &= e - 1;
      std::uint32_t ext = rel_adj[v] & ~set;
      while (ext) {
        const int w = __builtin_ctz(ext);
        ext &= ext - 1;
        ends[set | (1U << w)] |= 1U << w;
      }
    }
  }
  return s_nbrs;
}

bool has_cycle(const Graph& g) {
  return g.size() > g.order() - static_cast<int>(components(g, VertexSet(g.order())).size());
}

SubdivisionFamily longest_cycles_impl(const Graph& g, const EnumerationOptions& options, Budget& budget) {
  const int n = g.order();
  SubdivisionFamily fam{c1_pattern()};
  fam.universe = n;
  if (!has_cycle(g)) {
    fam.status = FamilyStatus::acyclic;
    return fam;
  }

  std::map<MemberKey, Subdivision> found;
  if (n <= kSubsetDpLimit) {
    const auto adj = adjacency_masks(g);
    int best = 0;
    std::vector<std::uint32_t> best_sets;
    std::vector<std::uint32_t> ends, rel_adj;
    for (Vertex s = 0; s + 2 < n; ++s) {
      const int r = n - 1 - s;
      if (r + 1 < best) break;
      const std::uint32_t s_nbrs = fill_cycle_table(adj, n, s, ends, rel_adj, budget);
      for (std::uint32_t set = 1; set < ends.size(); ++set) {
        const int size = __builtin_popcount(set) + 1;
        if (size < 3 || size < best || !(ends[set] & s_nbrs)) continue;
        if (size > best) {
          best = size;
          best_sets.clear();
          budget.offer(best);
        }
        best_sets.push_back((set << (s + 1)) | (1U << s));
      }
    }

    const std::size_t cap = options.limit.value_or(SIZE_MAX);
    std::vector<std::pair<VertexSet, Subdivision>> reps;
    std::vector<Vertex> seq;
    Vertex table_for = -1;
    std::uint32_t s_nbrs = 0;
    // best_sets is grouped by smallest vertex already
    for (auto set : best_sets) {
      const Vertex s = __builtin_ctz(set);
      if (s != table_for) {
        s_nbrs = fill_cycle_table(adj, n, s, ends, rel_adj, budget);
        table_for = s;
      }
      std::optional<Subdivision> rep;
      walk_dp_paths(ends, rel_adj, set >> (s + 1), s_nbrs, budget, seq, [&](const std::vector<Vertex>& back) {
        if (back.back() > back.front()) return true;
        std::vector<Vertex> cycle{s};
        for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(*it + s + 1);
        Subdivision sub = cycle_subdivision(cycle);
        if (!rep) rep = sub;
        if (found.size() <= cap) found.emplace(key_of(sub, n), std::move(sub));
        return found.size() <= cap;
      });
      reps.emplace_back(mask_to_set(n, set), std::move(*rep));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [vs, rep] : reps) {
      fam.vertex_sets.push_back(vs);
      fam.representatives.push_back(std::move(rep));
    }
    fam.status = FamilyStatus::nonempty;
    fam.mu = best;
    fam.edge_size = best;

    for (auto& [key, sub] : found) fam.members.push_back(std::move(sub));
    if (fam.members.size() > cap) {
      fam.members_truncated = true;
      fam.members.resize(cap);
    }
    return fam;
  }

  std::vector<std::vector<std::vector<Vertex>>> per_start(static_cast<std::size_t>(n));
  std::vector<int> per_best(static_cast<std::size_t>(n), -1);
  for_each_start(n, options.jobs, [&](Vertex s) {
    CycleSearch search{g, budget};
    search.run(s);
    per_best[s] = search.local_best;
    per_start[s] = std::move(search.found);
  });
  const int best = *std::max_element(per_best.begin(), per_best.end());
  for (Vertex s = 0; s < n; ++s) {
    if (per_best[s] != best) continue;
    for (auto& c : per_start[s]) {
      Subdivision sub = cycle_subdivision(c);
      found.emplace(key_of(sub, n), std::move(sub));
    }
  }
  finish_from_members(fam, std::move(found), options);
  return fam;
}

// ---------------------------------------------------------------------------
// Generic router: branch vertices first (decreasing pattern degree), then one
// path per pattern edge, pruning on the free-vertex bound.

class Router {
 public:
  Router(const Graph& g, const MultigraphPattern& m, Budget& budget) : g_(g), m_(m), budget_(budget) {
    for (int u = 0; u < m.order(); ++u) vertex_order_.push_back(u);
    std::stable_sort(vertex_order_.begin(), vertex_order_.end(),
                     [&](int a, int b) { return m.degree(a) > m.degree(b); });
    // Parallel classes (same unordered endpoint pair) are routed consecutively
    // with lexicographically increasing paths.
    std::vector<int> order(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) order[i] = i;
    auto pair_of = [&](int i) {
      const auto& e = m.edge(i);
      return std::minmax(e.u, e.v);
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const auto pa = pair_of(a), pb = pair_of(b);
      if (pa == pb) return false;
      // keep classes in order of their first member
      int fa = a, fb = b;
      for (int i = 0; i < m.size(); ++i) {
        if (pair_of(i) == pa) { fa = i; break; }
      }
      for (int i = 0; i < m.size(); ++i) {
        if (pair_of(i) == pb) { fb = i; break; }
      }
      return fa < fb;
    });
    edge_order_ = order;
    same_class_as_prev_.assign(order.size(), false);
    for (std::size_t k = 1; k < order.size(); ++k) same_class_as_prev_[k] = pair_of(order[k]) == pair_of(order[k - 1]);
    bm_.assign(static_cast<std::size_t>(m.order()), -1);
    paths_.assign(static_cast<std::size_t>(m.size()), {});
    used_ = VertexSet(g.order());
  }

  void run() { assign(0); }

  int best() const { return best_; }
  std::map<MemberKey, Subdivision>& found() { return found_; }

 private:
  int free_count() const { return g_.order() - used_.count(); }

  void assign(std::size_t k) {
    if (k == vertex_order_.size()) {
      route(0);
      return;
    }
    const int u = vertex_order_[k];
    const int need = m_.degree(u);
    for (Vertex h = 0; h < g_.order(); ++h) {
      if (used_.contains(h) || g_.degree(h) < need) continue;
      budget_.tick();
      bm_[u] = h;
      used_.insert(h);
      assign(k + 1);
      used_.erase(h);
      bm_[u] = -1;
    }
  }

  void route(std::size_t idx) {
    if (idx == edge_order_.size()) {
      complete();
      return;
    }
    const int remaining = static_cast<int>(edge_order_.size() - idx);
    if (current_ + free_count() + remaining < best_) return;
    const int e = edge_order_[idx];
    const auto& pe = m_.edge(e);
    const int a = std::min(pe.u, pe.v);
    const int b = std::max(pe.u, pe.v);
    std::vector<Vertex> path{bm_[a]};
    walk(idx, path, bm_[b], pe.is_loop());
  }

  void walk(std::size_t idx, std::vector<Vertex>& path, Vertex target, bool loop) {
    budget_.tick();
    const int remaining = static_cast<int>(edge_order_.size() - idx);
    if (current_ + free_count() + remaining < best_) return;
    const Vertex tip = path.back();
    for (Vertex w : g_.neighbors(tip)) {
      if (w == target && (!loop || path.size() >= 3)) {
        path.push_back(w);
        if (accept(idx, path, loop)) {
          const int e = edge_order_[idx];
          const auto& pe = m_.edge(e);
          paths_[e] = path;
          if (pe.u > pe.v) std::reverse(paths_[e].begin(), paths_[e].end());
          // interior steps were counted on the way; add the closing edge
          ++current_;
          route(idx + 1);
          --current_;
          paths_[e].clear();
        }
        path.pop_back();
        continue;
      }
      if (used_.contains(w)) continue;
      used_.insert(w);
      path.push_back(w);
      ++current_;
      walk(idx, path, target, loop);
      --current_;
      path.pop_back();
      used_.erase(w);
    }
  }

  bool accept(std::size_t idx, const std::vector<Vertex>& path, bool loop) const {
    if (loop && path[1] > path[path.size() - 2]) return false;
    if (same_class_as_prev_[idx]) {
      const int prev = edge_order_[idx - 1];
      std::vector<Vertex> prev_path = paths_[prev];
      const auto& pe = m_.edge(prev);
      if (pe.u > pe.v) std::reverse(prev_path.begin(), prev_path.end());
      if (!(prev_path < path)) return false;
    }
    return true;
  }

  void complete() {
    const int total = current_;
    if (total < best_) return;
    if (total > best_) {
      best_ = total;
      found_.clear();
      budget_.offer(total);
    }
    Subdivision s{bm_, paths_};
    found_.emplace(key_of(s, g_.order()), std::move(s));
  }

  const Graph& g_;
  const MultigraphPattern& m_;
  Budget& budget_;
  std::vector<int> vertex_order_;
  std::vector<int> edge_order_;
  std::vector<bool> same_class_as_prev_;
  std::vector<Vertex> bm_;
  std::vector<std::vector<Vertex>> paths_;
  VertexSet used_;
  int current_ = 0;
  int best_ = -1;
  std::map<MemberKey, Subdivision> found_;
};

bool pattern_has_cycle(const MultigraphPattern& m) { return m.size() >= m.order(); }

SubdivisionFamily generic_impl(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options,
                               Budget& budget, std::map<MemberKey, Subdivision>* partial, int* partial_best) {
  SubdivisionFamily fam{m};
  fam.universe = g.order();
  Router router(g, m, budget);
  try {
    router.run();
  } catch (const BudgetExceeded&) {
    if (partial) {
      *partial = std::move(router.found());
      *partial_best = router.best();
    }
    throw;
  }
  finish_from_members(fam, std::move(router.found()), options);
  if (fam.empty() && pattern_has_cycle(m) && !has_cycle(g)) fam.status = FamilyStatus::acyclic;
  return fam;
}

template <typename Impl>
SubdivisionFamily guarded(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options, Impl&& impl) {
  if (g.order() == 0) throw std::invalid_argument("enumeration needs a nonempty host graph");
  Budget budget(options.node_budget);
  try {
    SubdivisionFamily fam = impl(budget);
    fam.nodes = budget.used();
    return fam;
  } catch (const BudgetExceeded& e) {
    if (!options.allow_partial) throw;
    SubdivisionFamily fam{m};
    fam.universe = g.order();
    fam.exhaustive = false;
    fam.nodes = e.nodes();
    if (e.best_lower_bound()) fam.edge_size = *e.best_lower_bound();
    return fam;
  }
}

}  // namespace

SubdivisionFamily longest_paths(const Graph& g, const EnumerationOptions& options) {
  return guarded(g, k2_pattern(), options, [&](Budget& b) { return longest_paths_impl(g, options, b); });
}

SubdivisionFamily longest_cycles(const Graph& g, const EnumerationOptions& options) {
  return guarded(g, c1_pattern(), options, [&](Budget& b) { return longest_cycles_impl(g, options, b); });
}

SubdivisionFamily enumerate_maximum(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options) {
  // the degenerate one-vertex members exist only on the path route
  if (m.is_k2() && (options.use_specialized || g.size() == 0)) {
    auto fam = longest_paths(g, options);
    fam.pattern = m;
    return fam;
  }
  if (options.use_specialized && m.is_c1()) {
    auto fam = longest_cycles(g, options);
    fam.pattern = m;
    return fam;
  }
  if (g.order() == 0) throw std::invalid_argument("enumeration needs a nonempty host graph");
  Budget budget(options.node_budget);
  std::map<MemberKey, Subdivision> partial;
  int partial_best = -1;
  try {
    SubdivisionFamily fam = generic_impl(g, m, options, budget, &partial, &partial_best);
    fam.nodes = budget.used();
    return fam;
  } catch (const BudgetExceeded& e) {
    if (!options.allow_partial) throw;
    SubdivisionFamily fam{m};
    fam.universe = g.order();
    finish_from_members(fam, std::move(partial), options);
    fam.exhaustive = false;
    fam.nodes = e.nodes();
    return fam;
  }
}

}  // namespace gallai
