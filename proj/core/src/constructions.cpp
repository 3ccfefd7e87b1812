#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "gallai/constructions.hpp"

namespace gallai {

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, i + 5});
  }
  return Graph(10, edges);
}

Graph modified_petersen() {
  // N(9) = {4, 6, 7} in the labelling above.
  const Graph base = petersen();
  std::vector<Edge> edges;
  for (const auto& e : base.edges())
    if (e.u != 9 && e.v != 9) edges.push_back(e);
  edges.push_back({4, 9});
  edges.push_back({6, 10});
  edges.push_back({7, 11});
  return Graph(12, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph two_triangles(int bridge_edges) {
  if (bridge_edges < 1) throw std::invalid_argument("the joining path needs at least one edge");
  // Triangle 0,1,2; path from 2 through new vertices to 3; triangle 3,4,5 relabelled after.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  const int inner = bridge_edges - 1;
  const int right = 3 + inner;
  int prev = 2;
  for (int i = 0; i < inner; ++i) {
    edges.push_back({prev, 3 + i});
    prev = 3 + i;
  }
  edges.push_back({prev, right});
  edges.push_back({right, right + 1});
  edges.push_back({right + 1, right + 2});
  edges.push_back({right, right + 2});
  return Graph(right + 3, edges);
}

Graph cliques_at_cut_vertex(int a) {
  if (a < 2) throw std::invalid_argument("cliques need at least 2 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) edges.push_back({i, j});
  // second clique on a-1 .. 2a-2
  for (int i = a - 1; i < 2 * a - 1; ++i)
    for (int j = i + 1; j < 2 * a - 1; ++j) edges.push_back({i, j});
  return Graph(2 * a - 1, edges);
}

MultigraphPattern star_pattern(int k) {
  std::vector<PatternEdge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({0, i});
  return MultigraphPattern(k + 1, edges, k == 1 ? "K2" : (k == 2 ? "P3" : "K1_" + std::to_string(k)));
}

std::vector<MultigraphPattern> pattern_catalog() {
  return {
      MultigraphPattern(2, {{0, 1}}, "K2"),
      MultigraphPattern(1, {{0, 0}}, "C1"),
      MultigraphPattern(3, {{0, 1}, {1, 2}}, "P3"),
      star_pattern(3),
      star_pattern(4),
      MultigraphPattern(2, {{0, 1}, {0, 1}}, "C2"),
      MultigraphPattern(2, {{0, 1}, {0, 1}, {0, 1}}, "theta"),
  };
}

std::optional<MultigraphPattern> find_pattern(const std::string& name) {
  for (auto& p : pattern_catalog())
    if (p.name() == name) return p;
  return std::nullopt;
}

std::vector<CatalogEntry> graph_catalog() {
  return {
      {"petersen", "Petersen graph, outer 0-4, inner 5-9, spokes i-(i+5)", petersen()},
      {"modified_petersen", "Petersen minus vertex 9 plus leaves on 4, 6, 7; Gallai number 2", modified_petersen()},
      {"two_triangles", "two triangles joined by a 3-edge path", two_triangles(3)},
      {"path10", "path on 10 vertices", path_graph(10)},
      {"cycle12", "cycle on 12 vertices", cycle_graph(12)},
      {"complete5", "complete graph K5", complete_graph(5)},
  };
}

std::optional<Graph> find_graph(const std::string& name) {
  for (auto& e : graph_catalog())
    if (e.name == name) return e.graph;
  auto sized = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) || rest.size() > 4)
      return std::nullopt;
    return std::stoi(rest);
  };
  if (auto n = sized("path"); n && *n >= 1) return path_graph(*n);
  if (auto n = sized("cycle"); n && *n >= 3) return cycle_graph(*n);
  if (auto n = sized("complete"); n && *n >= 1) return complete_graph(*n);
  return std::nullopt;
}

namespace {

// Grows every graph of the previous level by one vertex attached to a subset
// of the old vertices; `max_new_degree` 1 restricts to trees.
std::vector<Graph> extend_level(const std::vector<Graph>& previous, int n, int max_new_degree) {
  std::map<unsigned __int128, Graph> seen;
  for (const Graph& g : previous) {
    const int old = n - 1;
    for (std::uint32_t mask = 1; mask < (1U << old); ++mask) {
      if (__builtin_popcount(mask) > max_new_degree) continue;
      std::vector<Edge> edges = g.edges();
      for (int v = 0; v < old; ++v)
        if (mask & (1U << v)) edges.push_back({v, old});
      Graph h(n, edges);
      const auto code = canonical_code(h);
      if (!seen.count(code)) seen.emplace(code, canonical_graph(h));
    }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

const std::vector<Graph>& level(std::vector<std::vector<Graph>>& cache, std::mutex& mu, int n, int cap,
                                int max_new_degree, const char* what) {
  if (n < 1 || n > cap) throw std::invalid_argument(std::string(what) + ": n must be in 1.." + std::to_string(cap));
  std::lock_guard lock(mu);
  if (cache.empty()) cache.push_back({Graph(1, {})});
  while (static_cast<int>(cache.size()) < n) {
    const int next = static_cast<int>(cache.size()) + 1;
    cache.push_back(extend_level(cache.back(), next, max_new_degree));
  }
  return cache[n - 1];
}

}  // namespace

const std::vector<Graph>& all_connected_graphs(int n) {
  static std::vector<std::vector<Graph>> cache;
  static std::mutex mu;
  return level(cache, mu, n, 8, 64, "all_connected_graphs");
}

const std::vector<Graph>& all_trees(int n) {
  static std::vector<std::vector<Graph>> cache;
  static std::mutex mu;
  return level(cache, mu, n, 12, 1, "all_trees");
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList relabel(const EdgeList& edges, const std::vector<int>& perm) {
  EdgeList out;
  for (auto [u, v] : edges) out.push_back(std::minmax(perm[u], perm[v]));
  std::sort(out.begin(), out.end());
  return out;
}

bool connected(int w, const EdgeList& edges) {
  std::vector<int> parent(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = w;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

void multisets(const std::vector<std::pair<int, int>>& pairs, std::size_t from, int left, EdgeList& cur,
               std::vector<EdgeList>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pairs.size(); ++i) {
    cur.push_back(pairs[i]);
    multisets(pairs, i, left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultigraphPattern> connected_patterns(int max_m) {
  if (max_m < 1 || max_m > 4) throw std::invalid_argument("connected_patterns: max_m must be in 1..4");
  std::vector<MultigraphPattern> out;
  for (int m = 1; m <= max_m; ++m) {
    std::set<std::pair<int, EdgeList>> seen;
    for (int w = 1; w <= m + 1; ++w) {
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < w; ++u)
        for (int v = u; v < w; ++v) pairs.emplace_back(u, v);
      std::vector<EdgeList> lists;
      EdgeList cur;
      multisets(pairs, 0, m, cur, lists);
      for (const auto& edges : lists) {
        if (!connected(w, edges)) continue;
        std::vector<int> perm(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) perm[i] = i;
        EdgeList best = relabel(edges, perm);
        while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, relabel(edges, perm));
        if (!seen.emplace(w, best).second) continue;
        std::vector<PatternEdge> pe;
        std::string name = "w" + std::to_string(w);
        for (auto [u, v] : best) {
          pe.push_back({u, v});
          name += "_" + std::to_string(u) + std::to_string(v);
        }
        out.emplace_back(w, pe, name);
      }
    }
  }
  return out;
}

Graph random_connected(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected needs n >= 1");
  if (den == 0 || num > den) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.insert(Edge{order[i], order[rng() % static_cast<std::uint64_t>(i)]}.normalized());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool take = rng() % den < num;
      if (take) edges.insert({u, v});
    }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

PlantedShortcut planted_shortcut(std::uint64_t seed, int min_length, int max_length) {
  if (min_length < 5 || max_length < min_length) throw std::invalid_argument("planted_shortcut: bad length range");
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const int l = pick(min_length, max_length);
  const int y = pick(2, l / 2);
  const int d = std::min(y, l - y);
  const int total = pick(1, d - 1);

  std::set<Edge> edges;
  std::vector<Vertex> cycle(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    cycle[i] = i;
    edges.insert(Edge{i, (i + 1) % l}.normalized());
  }
  // Touch points on C: x = 0, optionally one intermediate vertex, then y.
  std::vector<Vertex> touches{0};
  std::vector<int> lengths;
  if (total >= 2 && rng() % 2 == 0) {
    Vertex z;
    do {
      z = pick(1, l - 1);
    } while (z == y);
    touches.push_back(z);
    const int first = pick(1, total - 1);
    lengths = {first, total - first};
  } else {
    lengths = {total};
  }
  touches.push_back(y);

  int next = l;
  std::vector<Vertex> path{0};
  for (std::size_t s = 0; s < lengths.size(); ++s) {
    const Vertex a = touches[s], b = touches[s + 1];
    int len = lengths[s];
    // A one-edge segment between non-adjacent cycle vertices is a chord.
    Vertex prev = a;
    for (int i = 0; i + 1 < len; ++i) {
      edges.insert(Edge{prev, next}.normalized());
      path.push_back(next);
      prev = next++;
    }
    edges.insert(Edge{prev, b}.normalized());
    path.push_back(b);
  }
  // A few pendant noise vertices.
  const int noise = pick(0, 3);
  for (int i = 0; i < noise; ++i) {
    const Vertex anchor = pick(0, next - 1);
    edges.insert(Edge{anchor, next}.normalized());
    ++next;
  }
  return {Graph(next, std::vector<Edge>(edges.begin(), edges.end())), cycle, path};
}

}  // namespace gallai
