#include <algorithm>
#include <set>

#include "gallai/procedures.hpp"

namespace gallai {

bool IntersectionMultigraph::is_simple() const {
  std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
  return seen.size() == edges.size();
}

bool IntersectionMultigraph::respects_cut_edges() const {
  const std::set<std::pair<int, int>> present(edges.begin(), edges.end());
  for (int e : cut_edges) {
    if (present.count({e, e})) return false;
    for (int f = 0; f < pattern_size; ++f)
      if (f != e && present.count({e, f}) && present.count({f, e})) return false;
  }
  return true;
}

IntersectionMultigraph intersection_multigraph(const MultigraphPattern& m, const Subdivision& q, const Subdivision& r,
                                               const Connector& t, int universe) {
  const VertexSet qs = q.vertex_set(universe), rs = r.vertex_set(universe);
  if (qs.intersects(rs)) throw std::invalid_argument("Q and R must be disjoint");
  IntersectionMultigraph h;
  h.pattern_size = m.size();
  h.cut_edges = cut_edges(m);
  VertexSet used(universe);
  for (auto p : t.paths) {
    if (p.empty()) throw std::invalid_argument("empty connector path");
    if (rs.contains(p.front()) && qs.contains(p.back())) std::reverse(p.begin(), p.end());
    if (!qs.contains(p.front()) || !rs.contains(p.back())) throw std::invalid_argument("not a Q,R-connector");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (used.contains(p[i])) throw std::invalid_argument("connector paths are not disjoint");
      used.insert(p[i]);
      if (i > 0 && i + 1 < p.size() && (qs.contains(p[i]) || rs.contains(p[i])))
        throw std::invalid_argument("connector path meets Q or R internally");
    }
    h.edges.emplace_back(owning_edge(m, q, p.front()), owning_edge(m, r, p.back()));
  }
  return h;
}

int prop1_bound(const MultigraphPattern& m) {
  const int size = m.size();
  const int c = static_cast<int>(cut_edges(m).size());
  return size * size - c * size + c * (c - 1) / 2;
}

Prop1Report verify_prop1(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options) {
  EnumerationOptions eo = sets_only(options);
  eo.allow_partial = false;
  return verify_prop1(g, enumerate_maximum(g, m, eo));
}

Prop1Report verify_prop1(const Graph& g, const SubdivisionFamily& fam, std::size_t pair_limit) {
  if (!fam.exhaustive) throw NonExhaustiveFamily();
  const MultigraphPattern& m = fam.pattern;
  Prop1Report report;
  report.bound = prop1_bound(m);
  report.connectivity = connectivity(g);
  const auto pi = is_pairwise_intersecting(fam);
  if (pi) {
    report.summary = "pairwise intersecting, proposition vacuous";
    return report;
  }
  report.pairwise_intersecting = false;
  const auto [i, j] = *pi.witness;
  report.witness = std::make_pair(fam.vertex_sets[i], fam.vertex_sets[j]);
  report.separator = min_separator(g, fam.vertex_sets[i], fam.vertex_sets[j]);

  const int size = m.size();
  bool multigraphs_ok = true;
  std::size_t& checked = report.pairs_checked;
  for (std::size_t a = 0; a < fam.vertex_sets.size(); ++a)
    for (std::size_t b = a + 1; b < fam.vertex_sets.size(); ++b) {
      if (fam.vertex_sets[a].intersects(fam.vertex_sets[b])) continue;
      if (checked == pair_limit) {
        report.pairs_truncated = true;
        break;
      }
      ++checked;
      const Connector t = max_connector(g, fam.vertex_sets[a], fam.vertex_sets[b]);
      auto h = intersection_multigraph(m, fam.representatives[a], fam.representatives[b], t, g.order());
      const bool ok = h.is_simple() && h.respects_cut_edges() && static_cast<int>(h.edges.size()) <= report.bound;
      if (!ok) multigraphs_ok = false;
      if (a == i && b == j) report.multigraph = h;
    }
  const bool coarse = report.connectivity < size * size + 1;
  report.holds = report.connectivity <= report.bound && coarse && multigraphs_ok;
  report.summary = "not pairwise intersecting: " + report.witness->first.to_string() + " " +
                   report.witness->second.to_string() + " kappa=" + std::to_string(report.connectivity) +
                   " bound=" + std::to_string(report.bound) + (report.holds ? " holds" : " VIOLATED");
  return report;
}

}  // namespace gallai
