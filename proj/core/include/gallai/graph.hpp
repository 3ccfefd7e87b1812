#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "gallai/vertex_set.hpp"

namespace gallai {

/// Undirected edge, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const noexcept { return u <= v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order()-1. Immutable after
/// construction; loops, repeated edges and out-of-range endpoints are rejected
/// with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  bool valid(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool adjacent(Vertex a, Vertex b) const noexcept;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const VertexSet& neighborhood(Vertex v) const { return nbr_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;

  /// Sorted, normalized edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Copy with one extra edge (no-op if already present).
  Graph with_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> nbr_;
};

/// G[keep] relabelled to 0..|keep|-1 in increasing parent order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // -1 for dropped vertices

  VertexSet lift(const VertexSet& local, int parent_order) const;
  /// Parent-set restricted to the kept vertices, in local ids.
  VertexSet lower(const VertexSet& parent) const;
  std::vector<Vertex> lift(std::span<const Vertex> local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Shortest-path distance; nullopt when x and y lie in different components.
std::optional<int> distance(const Graph& g, Vertex x, Vertex y);

bool is_connected(const Graph& g);

/// Connected components of G - removed, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& removed);

/// Vertices reachable from `from` in G - removed (empty if from is removed).
VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& removed);

}  // namespace gallai
