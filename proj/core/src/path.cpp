#include "gallai/path.hpp"

#include <algorithm>
#include <cstdlib>

namespace gallai {

namespace {

void require_distinct(const Graph& host, std::span<const Vertex> vs) {
  VertexSet seen(host.order());
  for (Vertex v : vs) {
    if (!host.valid(v))
      throw PathError(PathError::Kind::not_adjacent, "vertex " + std::to_string(v) + " not in host graph");
    if (seen.contains(v))
      throw PathError(PathError::Kind::repeated_vertex, "vertex " + std::to_string(v) + " repeated");
    seen.insert(v);
  }
}

void require_adjacent(const Graph& host, Vertex a, Vertex b) {
  if (!host.adjacent(a, b))
    throw PathError(PathError::Kind::not_adjacent,
                    std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
}

int position(std::span<const Vertex> vs, Vertex v) noexcept {
  auto it = std::find(vs.begin(), vs.end(), v);
  return it == vs.end() ? -1 : static_cast<int>(it - vs.begin());
}

}  // namespace

Path::Path(const Graph& host, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PathError(PathError::Kind::empty, "empty path");
  require_distinct(host, vertices_);
  for (std::size_t i = 1; i < vertices_.size(); ++i) require_adjacent(host, vertices_[i - 1], vertices_[i]);
}

int Path::index_of(Vertex v) const noexcept { return position(vertices_, v); }

Path Path::subpath(const Graph& host, int i, int j) const {
  if (i < 0 || j < 0 || i >= order() || j >= order())
    throw PathError(PathError::Kind::not_on_path, "subpath index out of range");
  std::vector<Vertex> out;
  if (i <= j) {
    out.assign(vertices_.begin() + i, vertices_.begin() + j + 1);
  } else {
    for (int k = i; k >= j; --k) out.push_back(vertices_[k]);
  }
  return Path(host, std::move(out));
}

Path Path::reversed(const Graph& host) const {
  return Path(host, std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

Cycle::Cycle(const Graph& host, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3)
    throw PathError(PathError::Kind::too_short, "cycle needs at least 3 vertices");
  require_distinct(host, vertices_);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    require_adjacent(host, vertices_[i], vertices_[(i + 1) % vertices_.size()]);
}

int Cycle::index_of(Vertex v) const noexcept { return position(vertices_, v); }

int cycle_distance(const Cycle& c, Vertex x, Vertex y) {
  const int i = c.index_of(x);
  const int j = c.index_of(y);
  if (i < 0 || j < 0) throw PathError(PathError::Kind::not_on_cycle, "vertex not on cycle");
  const int d = std::abs(i - j);
  return std::min(d, c.length() - d);
}

namespace {

Path arc(const Graph& host, const Cycle& c, Vertex from, Vertex to, int step) {
  const int i = c.index_of(from);
  const int j = c.index_of(to);
  if (i < 0 || j < 0) throw PathError(PathError::Kind::not_on_cycle, "arc endpoint not on cycle");
  const int l = c.length();
  std::vector<Vertex> out{c.at(i)};
  for (int k = i; k != j;) {
    k = ((k + step) % l + l) % l;
    out.push_back(c.at(k));
  }
  return Path(host, std::move(out));
}

}  // namespace

Path forward_arc(const Graph& host, const Cycle& c, Vertex from, Vertex to) {
  return arc(host, c, from, to, +1);
}

Path backward_arc(const Graph& host, const Cycle& c, Vertex from, Vertex to) {
  return arc(host, c, from, to, -1);
}

Path longer_arc(const Graph& host, const Cycle& c, Vertex vi, Vertex vj) {
  if (vi == vj) throw PathError(PathError::Kind::equal_endpoints, "longer_arc needs distinct endpoints");
  Path forward = forward_arc(host, c, vi, vj);
  Path backward = backward_arc(host, c, vi, vj);
  return forward.length() >= backward.length() ? forward : backward;
}

Path concat_paths(const Graph& host, const Path& p, Vertex vi, Vertex wj, const Path& q) {
  const int i = p.index_of(vi);
  const int j = q.index_of(wj);
  if (i < 0 || j < 0) throw PathError(PathError::Kind::not_on_path, "concatenation point not on path");
  std::vector<Vertex> out(p.vertices().begin(), p.vertices().begin() + i + 1);
  if (vi == wj) {
    out.insert(out.end(), q.vertices().begin() + j + 1, q.vertices().end());
  } else if (host.adjacent(vi, wj)) {
    out.insert(out.end(), q.vertices().begin() + j, q.vertices().end());
  } else {
    throw PathError(PathError::Kind::undefined_concatenation,
                    std::to_string(vi) + " and " + std::to_string(wj) + " are neither adjacent nor equal");
  }
  return Path(host, std::move(out));  // rejects repeated vertices
}

}  // namespace gallai
