#include "gallai/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace gallai {

Graph::Graph(int order, std::span<const Edge> edges) : n_(order) {
  if (order < 0) throw std::invalid_argument("negative vertex count");
  build(std::vector<Edge>(edges.begin(), edges.end()));
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::build(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (!valid(e.u) || !valid(e.v))
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    e = e.normalized();
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("repeated edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n_), {});
  nbr_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    nbr_[e.u].insert(e.v);
    nbr_[e.v].insert(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const noexcept {
  return valid(a) && valid(b) && nbr_[a].contains(b);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

Graph Graph::with_edge(Edge e) const {
  if (adjacent(e.u, e.v)) return *this;
  std::vector<Edge> all = edges_;
  all.push_back(e);
  return Graph(n_, all);
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_order) const {
  VertexSet out(parent_order);
  local.for_each([&](Vertex v) { out.insert(to_parent[v]); });
  return out;
}

VertexSet InducedSubgraph::lower(const VertexSet& parent) const {
  VertexSet out(graph.order());
  parent.for_each([&](Vertex v) {
    if (v < static_cast<Vertex>(from_parent.size()) && from_parent[v] >= 0) out.insert(from_parent[v]);
  });
  return out;
}

std::vector<Vertex> InducedSubgraph::lift(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  keep.for_each([&](Vertex v) {
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  });
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (sub.from_parent[e.u] >= 0 && sub.from_parent[e.v] >= 0)
      edges.push_back({sub.from_parent[e.u], sub.from_parent[e.v]});
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

std::optional<int> distance(const Graph& g, Vertex x, Vertex y) {
  if (!g.valid(x) || !g.valid(y)) throw std::out_of_range("distance: invalid vertex id");
  if (x == y) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      if (w == y) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& removed) {
  VertexSet seen(g.order());
  std::vector<Vertex> stack;
  from.for_each([&](Vertex v) {
    if (!removed.contains(v) && !seen.contains(v)) {
      seen.insert(v);
      stack.push_back(v);
    }
  });
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (removed.contains(w) || seen.contains(w)) continue;
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable(g, VertexSet(g.order(), {0}), VertexSet(g.order())).count() == g.order();
}

std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& removed) {
  std::vector<std::vector<Vertex>> out;
  VertexSet done = removed;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (done.contains(v)) continue;
    VertexSet comp = reachable(g, VertexSet(g.order(), {v}), removed);
    out.push_back(comp.to_vector());
    done |= comp;
  }
  return out;
}

}  // namespace gallai
