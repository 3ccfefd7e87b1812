#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

class PathError : public std::invalid_argument {
 public:
  enum class Kind {
    empty,
    repeated_vertex,
    not_adjacent,
    too_short,
    not_on_path,
    not_on_cycle,
    equal_endpoints,
    undefined_concatenation,
  };

  PathError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Path v_1 ... v_k in a host graph: distinct vertices, consecutive pairs adjacent.
class Path {
 public:
  Path(const Graph& host, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const std::vector<Vertex>& sequence() const noexcept { return vertices_; }
  int order() const noexcept { return static_cast<int>(vertices_.size()); }
  /// Edge count ||P||.
  int length() const noexcept { return order() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex at(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  int index_of(Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return index_of(v) >= 0; }
  VertexSet vertex_set(int universe) const { return VertexSet(universe, vertices_); }

  /// v_i P v_j for positions i <= j (or reversed if i > j).
  Path subpath(const Graph& host, int i, int j) const;
  Path reversed(const Graph& host) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Cycle v_1 ... v_l v_1 with l >= 3 distinct vertices.
class Cycle {
 public:
  Cycle(const Graph& host, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const std::vector<Vertex>& sequence() const noexcept { return vertices_; }
  /// |C| = ||C||.
  int length() const noexcept { return static_cast<int>(vertices_.size()); }
  Vertex at(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  int index_of(Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return index_of(v) >= 0; }
  VertexSet vertex_set(int universe) const { return VertexSet(universe, vertices_); }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Distance inside C: the shorter of the two arcs between x and y.
int cycle_distance(const Cycle& c, Vertex x, Vertex y);

/// Arc from `from` to `to` following increasing cycle positions (indices mod |C|).
Path forward_arc(const Graph& host, const Cycle& c, Vertex from, Vertex to);
/// Arc from `from` to `to` following decreasing cycle positions.
Path backward_arc(const Graph& host, const Cycle& c, Vertex from, Vertex to);

/// v_i C v_j: the longer of the forward arc (which avoids v_{j+1}) and the
/// backward arc (which avoids v_{i+1}); ties go to the forward arc.
Path longer_arc(const Graph& host, const Cycle& c, Vertex vi, Vertex vj);

/// P v_i w_j Q: prefix of P ending at v_i followed by the suffix of Q starting
/// at w_j (or at w_{j+1} when v_i = w_j). Throws PathError when v_i and w_j are
/// neither adjacent nor equal, or when the result repeats a vertex.
Path concat_paths(const Graph& host, const Path& p, Vertex vi, Vertex wj, const Path& q);

}  // namespace gallai
