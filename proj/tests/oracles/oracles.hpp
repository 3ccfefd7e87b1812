#pragma once

// Slow reference implementations. They only use Graph adjacency and plain
// containers, never the library's search, flow or solver code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/pattern.hpp"

namespace oracle {

using gallai::Graph;
using gallai::Vertex;
using VSet = std::vector<int>;  // sorted

struct Family {
  int edges = -1;  // -1: nothing found
  std::set<VSet> sets;

  void offer(int e, VSet s) {
    std::sort(s.begin(), s.end());
    if (e > edges) {
      edges = e;
      sets.clear();
    }
    if (e == edges) sets.insert(std::move(s));
  }
};

// every simple path, by DFS from every start
inline Family longest_paths(const Graph& g) {
  Family f;
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int)> dfs = [&](int v) {
    f.offer(static_cast<int>(path.size()) - 1, path);
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    dfs(s);
    used[s] = 0;
  }
  return f;
}

inline Family longest_cycles(const Graph& g) {
  Family f;
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int)> dfs = [&](int v) {
    if (path.size() >= 3 && g.adjacent(v, path.front())) f.offer(static_cast<int>(path.size()), path);
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    dfs(s);
    used[s] = 0;
  }
  return f;
}

// Brute force over injective branch maps and, edge by edge, every admissible
// path. Fine for n <= 6 and a handful of pattern edges.
inline Family max_subdivisions(const Graph& g, const gallai::MultigraphPattern& m) {
  Family f;
  const int n = g.order();
  std::vector<int> bm(m.order(), -1);
  std::vector<char> taken(n, 0);
  std::set<std::pair<int, int>> used_edges;
  int total = 0;

  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

  std::function<void(int)> route = [&](int e) {
    if (e == m.size()) {
      VSet s;
      for (int v = 0; v < n; ++v)
        if (taken[v]) s.push_back(v);
      f.offer(total, s);
      return;
    }
    const auto& pe = m.edge(e);
    const int from = bm[pe.u], to = bm[pe.v];
    std::vector<int> path{from};
    std::function<void(int)> walk = [&](int v) {
      for (Vertex w : g.neighbors(v)) {
        const auto k = key(v, w);
        if (used_edges.count(k)) continue;
        const int len = static_cast<int>(path.size());
        if (w == to) {
          if (pe.is_loop() && len < 3) continue;
          used_edges.insert(k);
          std::vector<std::pair<int, int>> added;
          for (int i = 1; i < len; ++i) {
            added.push_back(key(path[i - 1], path[i]));
            used_edges.insert(added.back());
          }
          total += len;
          route(e + 1);
          total -= len;
          for (const auto& a : added) used_edges.erase(a);
          used_edges.erase(k);
          continue;
        }
        if (taken[w]) continue;
        taken[w] = 1;
        path.push_back(w);
        walk(w);
        path.pop_back();
        taken[w] = 0;
      }
    };
    walk(from);
  };

  std::function<void(int)> place = [&](int u) {
    if (u == m.order()) {
      route(0);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      taken[v] = 1;
      bm[u] = v;
      place(u + 1);
      taken[v] = 0;
    }
  };
  place(0);
  return f;
}

// smallest subset (by size, then first in mask order) meeting every set
inline std::vector<int> min_hitting_set(int universe, const std::vector<std::vector<int>>& sets) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : sets) {
    std::uint32_t mk = 0;
    for (int v : s) mk |= 1U << v;
    masks.push_back(mk);
  }
  std::uint32_t best = 0;
  int best_size = universe + 1;
  for (std::uint32_t x = 0; x < (1U << universe); ++x) {
    const int c = __builtin_popcount(x);
    if (c >= best_size) continue;
    bool ok = true;
    for (auto mk : masks)
      if (!(mk & x)) {
        ok = false;
        break;
      }
    if (ok) {
      best = x;
      best_size = c;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < universe; ++v)
    if (best >> v & 1) out.push_back(v);
  return out;
}

// true if some A,B-path survives in G - s
inline bool connected_after(const Graph& g, const std::vector<char>& in_a, const std::vector<char>& in_b,
                            const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (in_a[v] && !removed[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (in_b[v]) return true;
    for (Vertex w : g.neighbors(v))
      if (!seen[w] && !removed[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

inline bool separates(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& s) {
  const int n = g.order();
  std::vector<char> in_a(n, 0), in_b(n, 0), removed(n, 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) in_b[v] = 1;
  for (int v : s) removed[v] = 1;
  return !connected_after(g, in_a, in_b, removed);
}

// size of a minimum A,B-separator, by subsets of increasing size (n <= 20)
inline int min_separator_size(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  const int n = g.order();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) in_b[v] = 1;
  int best = n;
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    const int c = __builtin_popcount(x);
    if (c >= best) continue;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) removed[v] = x >> v & 1;
    if (!connected_after(g, in_a, in_b, removed)) best = c;
  }
  return best;
}

// kappa: fewest vertices whose removal disconnects G or leaves one vertex
inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    const int c = __builtin_popcount(x);
    if (c >= best || n - c < 2) continue;
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!(x >> v & 1)) {
        start = v;
        break;
      }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!seen[w] && !(x >> w & 1)) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached < n - c) best = c;
  }
  return best;
}

// vertex-disjoint A,B-paths, each meeting A only first and B only last
inline bool valid_connector(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<std::vector<Vertex>>& paths) {
  const int n = g.order();
  std::vector<char> in_a(n, 0), in_b(n, 0), used(n, 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) in_b[v] = 1;
  for (const auto& p : paths) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int v = p[i];
      if (v < 0 || v >= n || used[v]) return false;
      used[v] = 1;
      if (i > 0 && !g.adjacent(p[i - 1], v)) return false;
      if (in_a[v] != (i == 0)) return false;
      if (in_b[v] != (i + 1 == p.size())) return false;
    }
  }
  return true;
}

// s <= max{5 n^(2/3), 2 m^2 n^(1/3)} via cubes, in 128-bit integers
inline bool within_bound(std::int64_t s, std::int64_t n, std::int64_t m) {
  using I = __int128;
  const I s3 = I(s) * s * s;
  return s3 <= I(125) * n * n || s3 <= I(8) * m * m * m * m * m * m * n;
}

}  // namespace oracle
