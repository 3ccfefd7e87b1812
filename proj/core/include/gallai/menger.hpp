#pragma once

#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Pairwise vertex-disjoint A,B-paths. Each path meets A only in its first
/// vertex and B only in its last; a vertex of A∩B is a one-vertex path.
struct Connector {
  std::vector<std::vector<Vertex>> paths;
  int size() const noexcept { return static_cast<int>(paths.size()); }
};

/// Maximum A,B-connector. Throws std::invalid_argument on empty A or B.
Connector max_connector(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Minimum A,B-separator; among all minimum ones, the lexicographically
/// smallest vertex set.
VertexSet min_separator(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Size of a maximum A,B-connector without building the paths.
int connector_size(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Vertex connectivity, with kappa(K_n) = n - 1 and kappa = 0 for disconnected
/// graphs or a single vertex.
int connectivity(const Graph& g);

/// True when no A,B-path survives deleting `s`.
bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s);

}  // namespace gallai
