#pragma once

#include <string>
#include <vector>

namespace gallai {

struct PatternEdge {
  int u = 0;
  int v = 0;
  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

/// Connected multigraph M = (W, F) used as a subdivision pattern. Loops and
/// parallel edges are allowed; each edge keeps its position as a stable index.
class MultigraphPattern {
 public:
  /// Throws std::invalid_argument if there are no edges, an endpoint is out of
  /// range, or the multigraph is disconnected.
  MultigraphPattern(int order, std::vector<PatternEdge> edges, std::string name = {});

  int order() const noexcept { return w_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<PatternEdge>& edges() const noexcept { return edges_; }
  const PatternEdge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
  const std::string& name() const noexcept { return name_; }

  /// Loops contribute 2.
  int degree(int u) const;
  /// Indices of edges incident to u, increasing.
  std::vector<int> incident_edges(int u) const;

  bool is_k2() const noexcept;
  bool is_c1() const noexcept;

  friend bool operator==(const MultigraphPattern& a, const MultigraphPattern& b) {
    return a.w_ == b.w_ && a.edges_ == b.edges_;
  }

 private:
  int w_;
  std::vector<PatternEdge> edges_;
  std::string name_;
};

/// Bridges of M, increasing. Loops and members of parallel classes are never bridges.
std::vector<int> cut_edges(const MultigraphPattern& m);

/// Vertices of the component of M - edge `removed` that contains `start`.
std::vector<int> component_without_edge(const MultigraphPattern& m, int removed, int start);

}  // namespace gallai
