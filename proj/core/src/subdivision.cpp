#include "gallai/subdivision.hpp"

#include <algorithm>
#include <set>

namespace gallai {

int Subdivision::edge_count() const {
  int total = 0;
  for (const auto& p : edge_paths) total += static_cast<int>(p.size()) - 1;
  return total;
}

VertexSet Subdivision::vertex_set(int universe) const {
  VertexSet s(universe);
  for (Vertex b : branch_map) s.insert(b);
  for (const auto& p : edge_paths)
    for (Vertex v : p) s.insert(v);
  return s;
}

int Subdivision::vertex_count() const {
  std::set<Vertex> s(branch_map.begin(), branch_map.end());
  for (const auto& p : edge_paths) s.insert(p.begin(), p.end());
  return static_cast<int>(s.size());
}

std::vector<Edge> Subdivision::edge_set() const {
  std::vector<Edge> out;
  for (const auto& p : edge_paths)
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Edge{p[i - 1], p[i]}.normalized());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubdivisionCheck is_subdivision(const Graph& g, const MultigraphPattern& m, const Subdivision& s) {
  auto fail = [](std::string why) { return SubdivisionCheck{false, std::move(why)}; };
  if (static_cast<int>(s.branch_map.size()) != m.order()) return fail("branch map size");
  if (static_cast<int>(s.edge_paths.size()) != m.size()) return fail("edge path count");

  VertexSet branch(g.order());
  for (Vertex b : s.branch_map) {
    if (!g.valid(b)) return fail("branch vertex out of range");
    if (branch.contains(b)) return fail("branch injectivity");
    branch.insert(b);
  }

  VertexSet interiors(g.order());
  std::set<Edge> used_edges;
  for (int e = 0; e < m.size(); ++e) {
    const auto& pe = m.edge(e);
    const auto& path = s.edge_paths[e];
    const std::string tag = " (edge " + std::to_string(e) + ")";
    if (path.size() < 2) return fail("edge path has no edge" + tag);
    if (path.front() != s.branch_map[pe.u] || path.back() != s.branch_map[pe.v])
      return fail("endpoint mismatch" + tag);
    if (pe.is_loop() && path.size() < 4) return fail("loop too short" + tag);
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!g.adjacent(path[i - 1], path[i])) return fail("not adjacent" + tag);
      if (!used_edges.insert(Edge{path[i - 1], path[i]}.normalized()).second) return fail("shared edge" + tag);
    }
    VertexSet own(g.order());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const Vertex v = path[i];
      if (!g.valid(v)) return fail("vertex out of range" + tag);
      if (own.contains(v)) return fail("repeated vertex" + tag);
      if (branch.contains(v)) return fail("interior meets branch vertex" + tag);
      if (interiors.contains(v)) return fail("interior disjointness" + tag);
      own.insert(v);
    }
    interiors |= own;
  }
  return {};
}

Subdivision path_subdivision(std::vector<Vertex> path) {
  Subdivision s;
  s.branch_map = {path.front(), path.back()};
  s.edge_paths.push_back(std::move(path));
  return s;
}

Subdivision cycle_subdivision(const std::vector<Vertex>& cycle) {
  Subdivision s;
  s.branch_map = {cycle.front()};
  std::vector<Vertex> closed = cycle;
  closed.push_back(cycle.front());
  s.edge_paths.push_back(std::move(closed));
  return s;
}

BudgetExceeded::BudgetExceeded(std::uint64_t nodes, std::optional<int> best_lower_bound)
    : std::runtime_error("search node budget exceeded after " + std::to_string(nodes) + " nodes" +
                         (best_lower_bound ? " (best edge count so far " + std::to_string(*best_lower_bound) + ")"
                                           : std::string())),
      nodes_(nodes),
      best_(best_lower_bound) {}

EnumerationOptions sets_only(EnumerationOptions o) {
  if (!o.limit) o.limit = 64;
  return o;
}

std::string family_report(const SubdivisionFamily& family) {
  std::string out = "family m=" + std::to_string(family.edge_size) + " mu=" + std::to_string(family.mu) +
                    " count=" + std::to_string(family.vertex_sets.size()) +
                    " exhaustive=" + (family.exhaustive ? "true" : "false") + "\n";
  for (const auto& vs : family.vertex_sets) {
    bool first = true;
    vs.for_each([&](Vertex v) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

namespace {

Subdivision relabel(const Subdivision& s, const InducedSubgraph& sub) {
  Subdivision out;
  for (Vertex b : s.branch_map) out.branch_map.push_back(sub.from_parent[b]);
  for (const auto& p : s.edge_paths) {
    std::vector<Vertex> q;
    for (Vertex v : p) q.push_back(sub.from_parent[v]);
    out.edge_paths.push_back(std::move(q));
  }
  return out;
}

}  // namespace

SubdivisionFamily restrict_family(const SubdivisionFamily& family, const InducedSubgraph& sub) {
  SubdivisionFamily out{family.pattern};
  out.universe = sub.graph.order();
  out.exhaustive = family.exhaustive;
  VertexSet kept(family.universe);
  for (Vertex v : sub.to_parent) kept.insert(v);
  for (std::size_t i = 0; i < family.vertex_sets.size(); ++i) {
    if (!family.vertex_sets[i].is_subset_of(kept)) continue;
    out.vertex_sets.push_back(sub.lower(family.vertex_sets[i]));
    out.representatives.push_back(relabel(family.representatives[i], sub));
  }
  for (const auto& member : family.members)
    if (member.vertex_set(family.universe).is_subset_of(kept)) out.members.push_back(relabel(member, sub));
  out.members_truncated = family.members_truncated;
  if (!out.vertex_sets.empty()) {
    out.status = FamilyStatus::nonempty;
    out.mu = family.mu;
    out.edge_size = family.edge_size;
  }
  // Relabelling preserves the increasing order of vertices, so sorted input stays sorted.
  return out;
}

}  // namespace gallai
