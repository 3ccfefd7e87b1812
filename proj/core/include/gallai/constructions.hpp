#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

/// Outer 5-cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2)%5), spokes i ~ i+5.
Graph petersen();
/// Petersen minus vertex 9, with leaves 9, 10, 11 on its former neighbours 4, 6, 7.
Graph modified_petersen();

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Two triangles joined by a path with `bridge_edges` edges.
Graph two_triangles(int bridge_edges);
/// Two copies of K_a sharing one vertex.
Graph cliques_at_cut_vertex(int a);

MultigraphPattern star_pattern(int k);

/// K2, C1, P3, K1_3, K1_4, C2 (double edge), theta (three parallel edges).
std::vector<MultigraphPattern> pattern_catalog();
std::optional<MultigraphPattern> find_pattern(const std::string& name);

struct CatalogEntry {
  std::string name;
  std::string note;
  Graph graph;
};

std::vector<CatalogEntry> graph_catalog();
/// Catalog names plus the families path<N>, cycle<N>, complete<N>.
std::optional<Graph> find_graph(const std::string& name);

/// Canonical code of a graph with at most 16 vertices: the minimum
/// upper-triangle adjacency bit string over orderings compatible with colour
/// refinement. Equal codes iff isomorphic (for equal order).
unsigned __int128 canonical_code(const Graph& g);
/// Relabels g by its canonical ordering.
Graph canonical_graph(const Graph& g);

/// Every connected simple graph on n vertices once up to isomorphism (n <= 8).
const std::vector<Graph>& all_connected_graphs(int n);
/// Every tree on n vertices once up to isomorphism (n <= 12).
const std::vector<Graph>& all_trees(int n);
/// Connected patterns with 1..max_m edges (loops and parallel edges allowed),
/// one per isomorphism class.
std::vector<MultigraphPattern> connected_patterns(int max_m);

/// Random spanning tree plus each remaining pair with probability num/den.
Graph random_connected(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// A cycle with a planted path P whose ends lie on it and ||P|| < d_C(ends).
struct PlantedShortcut {
  Graph graph;
  std::vector<Vertex> cycle;
  std::vector<Vertex> path;
};
PlantedShortcut planted_shortcut(std::uint64_t seed, int min_length = 6, int max_length = 30);

}  // namespace gallai
