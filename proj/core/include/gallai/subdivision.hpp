#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

/// A concrete M-subdivision in a host graph: the image of every pattern vertex
/// plus one path per pattern edge. edge_paths[e] runs from
/// branch_map[edge(e).u] to branch_map[edge(e).v]; for a loop it is closed
/// (first == last) and has at least three edges.
struct Subdivision {
  std::vector<Vertex> branch_map;
  std::vector<std::vector<Vertex>> edge_paths;

  /// ||Q|| = sum of ||Q_e||.
  int edge_count() const;
  /// |Q|.
  int vertex_count() const;
  VertexSet vertex_set(int universe) const;
  /// Sorted normalized host edges.
  std::vector<Edge> edge_set() const;

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

struct SubdivisionCheck {
  bool ok = true;
  std::string violation;  // first violated invariant, empty when ok
  explicit operator bool() const noexcept { return ok; }
};

SubdivisionCheck is_subdivision(const Graph& g, const MultigraphPattern& m, const Subdivision& s);

/// Wraps a host path as a K2-subdivision (a single vertex gives the
/// zero-edge degenerate member used for edgeless hosts).
Subdivision path_subdivision(std::vector<Vertex> path);
/// Wraps a host cycle as a C1-subdivision branched at its first vertex.
Subdivision cycle_subdivision(const std::vector<Vertex>& cycle);

enum class FamilyStatus {
  nonempty,
  no_subdivision,  // G contains no M-subdivision
  acyclic,         // pattern needs a cycle and G is a forest
};

/// L(M, G): all maximum M-subdivisions of G, deduplicated as subgraphs.
struct SubdivisionFamily {
  MultigraphPattern pattern;
  int universe = 0;  // host order
  FamilyStatus status = FamilyStatus::no_subdivision;

  /// Distinct maximum subgraphs in canonical order; possibly truncated.
  std::vector<Subdivision> members;
  bool members_truncated = false;

  /// Distinct vertex sets of all maximum subdivisions, sorted.
  std::vector<VertexSet> vertex_sets;
  /// One maximum subdivision per entry of vertex_sets.
  std::vector<Subdivision> representatives;

  int mu = 0;         // common vertex count |Q|
  int edge_size = 0;  // common edge count ||Q||
  /// False only for partial results returned under allow_partial.
  bool exhaustive = true;
  std::uint64_t nodes = 0;

  bool empty() const noexcept { return vertex_sets.empty(); }
};

struct EnumerationOptions {
  /// Cap on `members`; vertex_sets are always complete.
  std::optional<std::size_t> limit;
  std::uint64_t node_budget = 100'000'000;
  int jobs = 1;
  /// Return a non-exhaustive family instead of throwing on budget exhaustion.
  bool allow_partial = false;
  /// Dispatch K2 / C1 to the dedicated path and cycle searches.
  bool use_specialized = true;
};

/// Copy of `o` with a small default member cap, for callers that only read
/// vertex_sets and representatives (members of dense hosts can be astronomically many).
EnumerationOptions sets_only(EnumerationOptions o);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t nodes, std::optional<int> best_lower_bound);
  std::uint64_t nodes() const noexcept { return nodes_; }
  /// Largest edge count of any subdivision seen before the budget ran out.
  std::optional<int> best_lower_bound() const noexcept { return best_; }

 private:
  std::uint64_t nodes_;
  std::optional<int> best_;
};

SubdivisionFamily enumerate_maximum(const Graph& g, const MultigraphPattern& m,
                                    const EnumerationOptions& options = {});
SubdivisionFamily longest_paths(const Graph& g, const EnumerationOptions& options = {});
SubdivisionFamily longest_cycles(const Graph& g, const EnumerationOptions& options = {});

/// `family m=<edge_size> mu=<mu> count=<k> exhaustive=<bool>` followed by one
/// sorted vertex list per member vertex set.
std::string family_report(const SubdivisionFamily& family);

/// Members of `family` lying inside the kept vertices, relabelled into the
/// induced subgraph. Valid as L(M, H) when at least one member survives.
SubdivisionFamily restrict_family(const SubdivisionFamily& family, const InducedSubgraph& sub);

}  // namespace gallai
