#include <algorithm>
#include <deque>

#include "checks.hpp"

namespace gallai {

namespace {

std::vector<Vertex> open_sequence(const std::vector<Vertex>& edge_path) {
  // Loops are stored closed; drop the repeated branch vertex.
  if (edge_path.size() > 1 && edge_path.front() == edge_path.back())
    return {edge_path.begin(), edge_path.end() - 1};
  return edge_path;
}

// Shortest x,y-path inside `allowed`, optionally without the edge xy itself.
std::vector<Vertex> bfs_path(const Graph& g, const VertexSet& allowed, Vertex x, Vertex y, bool skip_direct) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!allowed.contains(w) || parent[w] != -1) continue;
      if (skip_direct && u == x && w == y) continue;
      parent[w] = u;
      if (w == y) {
        std::vector<Vertex> path{y};
        for (Vertex v = y; v != x; v = parent[v]) path.push_back(parent[v]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

HypothesisFailure fail(Certificate cert, std::string reason) {
  cert.failure = std::move(reason);
  cert.checks = derive_checks(cert);
  return HypothesisFailure{std::move(cert)};
}

}  // namespace

Outcome<CycleResult> base_cycle(const Graph& h, const SubdivisionFamily& family, const Threshold& theta) {
  const int m = family.pattern.size();
  Certificate cert;
  cert.step = "base_cycle";
  cert.params["m"] = std::to_string(m);
  cert.params["theta"] = theta.to_string();
  if (!family.exhaustive) return fail(cert, "family not exhaustive");
  if (family.empty()) return fail(cert, "family empty");
  if (!is_pairwise_intersecting(family)) return fail(cert, "family not pairwise intersecting");

  const int tau = min_hitting_set(hitting_instance(family)).size();
  cert.params["tau"] = std::to_string(tau);
  if (!theta.scaled_less(static_cast<std::int64_t>(m) * m, 1, tau)) return fail(cert, "tau at most m^2*theta");

  // Minimum transversal inside V(Q) for the first member Q.
  const Subdivision& q = family.representatives.front();
  const VertexSet& vq = family.vertex_sets.front();
  HittingInstance inside{family.universe, {}, true};
  for (const auto& vs : family.vertex_sets) inside.sets.push_back(vs & vq);
  const VertexSet s = min_hitting_set(inside).set;
  cert.objects["set:S"] = s.to_vector();

  int edge = -1;
  for (int e = 0; e < m; ++e) {
    const VertexSet qe(family.universe, open_sequence(q.edge_paths[e]));
    if (theta.scaled_less(m, 1, (qe & s).count())) {
      edge = e;
      break;
    }
  }
  if (edge < 0) return fail(cert, "no pattern edge carries more than m*theta vertices of S");
  const std::vector<Vertex> qe = open_sequence(q.edge_paths[edge]);
  cert.objects["path:Qe"] = qe;
  cert.params["edge"] = std::to_string(edge);

  // Shortest window P of Q_e with (S - V(Q_e)) + V(P) still a transversal,
  // earliest start among the shortest.
  const VertexSet rest = s - VertexSet(family.universe, qe);
  std::vector<Vertex> p;
  const int len = static_cast<int>(qe.size());
  for (int w = 1; w <= len && p.empty(); ++w) {
    for (int i = 0; i + w <= len; ++i) {
      VertexSet t = rest;
      for (int k = i; k < i + w; ++k) t.insert(qe[k]);
      if (is_transversal(t, family)) {
        p.assign(qe.begin() + i, qe.begin() + i + w);
        break;
      }
    }
  }
  cert.objects["path:P"] = p;
  if (p.size() < 2) return fail(cert, "P is a single vertex");

  const VertexSet pset(family.universe, p);
  std::array<int, 2> r_index{-1, -1};
  const std::array<Vertex, 2> ends{p.front(), p.back()};
  for (int side = 0; side < 2; ++side) {
    for (std::size_t i = 0; i < family.vertex_sets.size(); ++i) {
      const VertexSet& vs = family.vertex_sets[i];
      if (vs.intersects(rest)) continue;
      if ((vs & pset) == VertexSet(family.universe, {ends[side]})) {
        r_index[side] = static_cast<int>(i);
        break;
      }
    }
    if (r_index[side] < 0) return fail(cert, "no member meets P only at " + std::to_string(ends[side]));
  }
  const VertexSet& ri = family.vertex_sets[r_index[0]];
  const VertexSet& rj = family.vertex_sets[r_index[1]];
  cert.objects["set:R(qi)"] = ri.to_vector();
  cert.objects["set:R(qj)"] = rj.to_vector();

  const std::vector<Vertex> r = bfs_path(h, ri | rj, ends[0], ends[1], p.size() == 2);
  if (r.empty()) return fail(cert, "no connecting path through R(qi) and R(qj)");
  cert.objects["path:R"] = r;

  std::vector<Vertex> c0 = p;
  for (std::size_t i = r.size() - 2; i >= 1; --i) c0.push_back(r[i]);
  cert.objects["cycle:C0"] = c0;
  cert.output = "|C0|=" + std::to_string(c0.size());
  cert.checks = derive_checks(cert);
  Cycle(h, c0);  // validates
  return CycleResult{c0, cert};
}

int owning_edge(const MultigraphPattern& m, const Subdivision& q, Vertex y) {
  for (int e = 0; e < m.size(); ++e) {
    const auto& path = q.edge_paths[e];
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (path[i] == y) return e;
  }
  for (int b = 0; b < m.order(); ++b)
    if (q.branch_map[b] == y) {
      const auto inc = m.incident_edges(b);
      return inc.empty() ? -1 : inc.front();
    }
  return -1;
}

Outcome<CycleResult> enlarge_cycle(const Graph& g, const Cycle& c, const MultigraphPattern& m, const Subdivision& q,
                                   const Connector& t) {
  Certificate cert;
  cert.step = "enlarge_cycle";
  cert.objects["cycle:C"] = c.sequence();
  cert.params["m"] = std::to_string(m.size());
  cert.params["t"] = std::to_string(t.size());
  const VertexSet qset = q.vertex_set(g.order());
  for (Vertex v : c.vertices())
    if (qset.contains(v)) return fail(cert, "Q meets C");

  std::vector<std::vector<Vertex>> paths;
  for (auto p : t.paths) {
    if (!p.empty() && qset.contains(p.front()) && c.contains(p.back())) std::reverse(p.begin(), p.end());
    if (p.size() < 2 || !c.contains(p.front()) || !qset.contains(p.back()))
      throw std::invalid_argument("connector path does not run from C to Q");
    paths.push_back(std::move(p));
  }

  int edge = -1, first = -1, second = -1;
  for (int e = 0; e < m.size() && edge < 0; ++e) {
    const auto& qe = q.edge_paths[e];
    std::vector<int> hit;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (std::find(qe.begin(), qe.end(), paths[i].back()) != qe.end()) hit.push_back(static_cast<int>(i));
    if (hit.size() >= 2) {
      edge = e;
      first = hit[0];
      second = hit[1];
    }
  }
  if (edge < 0) return fail(cert, "pigeonhole unmet: no pattern edge meets two connector paths");

  const auto& t1 = paths[first];
  const auto& t2 = paths[second];
  const Vertex y1 = t1.back(), y2 = t2.back();
  const std::vector<Vertex> ring = open_sequence(q.edge_paths[edge]);
  const bool loop = m.edge(edge).is_loop();
  const int i1 = static_cast<int>(std::find(ring.begin(), ring.end(), y1) - ring.begin());
  const int i2 = static_cast<int>(std::find(ring.begin(), ring.end(), y2) - ring.begin());
  std::vector<Vertex> qseg;
  if (!loop) {
    const int step = i1 < i2 ? 1 : -1;
    for (int i = i1;; i += step) {
      qseg.push_back(ring[i]);
      if (i == i2) break;
    }
  } else {
    const Cycle qcycle(g, ring);
    qseg = longer_arc(g, qcycle, y1, y2).sequence();
  }

  std::vector<Vertex> next = t1;
  next.insert(next.end(), qseg.begin() + 1, qseg.end());
  for (auto it = t2.rbegin() + 1; it != t2.rend(); ++it) next.push_back(*it);
  const auto arc = longer_arc(g, c, t2.front(), t1.front()).sequence();
  for (std::size_t i = 1; i + 1 < arc.size(); ++i) next.push_back(arc[i]);
  try {
    Cycle(g, next);
  } catch (const PathError& e) {
    throw std::invalid_argument(std::string("rerouted cycle is invalid: ") + e.what());
  }

  cert.objects["path:T1"] = t1;
  cert.objects["path:T2"] = t2;
  cert.objects["path:Qseg"] = qseg;
  cert.objects["cycle:C'"] = next;
  cert.params["edge"] = std::to_string(edge);
  cert.output = "|C'|=" + std::to_string(next.size());
  if (next.size() <= c.sequence().size()) return fail(cert, "not longer: Q is not maximum");
  cert.checks = derive_checks(cert);
  return CycleResult{next, cert};
}

InnerPathStats inner_path_stats(const MultigraphPattern& m, const Subdivision& q, const Connector& t) {
  InnerPathStats out;
  out.hits.assign(static_cast<std::size_t>(m.size()), 0);
  out.inner.resize(static_cast<std::size_t>(m.size()));
  out.outer.resize(static_cast<std::size_t>(m.size()));
  std::vector<std::vector<int>> positions(static_cast<std::size_t>(m.size()));
  for (const auto& p : t.paths) {
    if (p.empty()) throw std::invalid_argument("empty connector path");
    Vertex y = p.back();
    int e = owning_edge(m, q, y);
    if (e < 0) {
      y = p.front();
      e = owning_edge(m, q, y);
    }
    if (e < 0) throw std::invalid_argument("connector path does not end on Q");
    const auto& path = q.edge_paths[e];
    positions[e].push_back(static_cast<int>(std::find(path.begin(), path.end(), y) - path.begin()));
  }
  int covered = 0;
  for (int e = 0; e < m.size(); ++e) {
    auto& pos = positions[e];
    out.hits[e] = static_cast<int>(pos.size());
    if (pos.empty()) continue;
    ++covered;
    std::sort(pos.begin(), pos.end());
    const auto& path = q.edge_paths[e];
    auto slice = [&](int a, int b) { return std::vector<Vertex>(path.begin() + a, path.begin() + b + 1); };
    out.outer[e].push_back(slice(0, pos.front()));
    for (std::size_t k = 1; k < pos.size(); ++k) out.inner[e].push_back(slice(pos[k - 1], pos[k]));
    out.outer[e].push_back(slice(pos.back(), static_cast<int>(path.size()) - 1));
    out.total_inner += static_cast<int>(pos.size()) - 1;
  }
  auto& cert = out.cert;
  cert.step = "inner_path_stats";
  cert.params["t"] = std::to_string(t.size());
  cert.params["m"] = std::to_string(m.size());
  cert.params["covered"] = std::to_string(covered);
  cert.params["inner"] = std::to_string(out.total_inner);
  std::string h;
  for (int v : out.hits) h += (h.empty() ? "" : ",") + std::to_string(v);
  cert.output = "h=[" + h + "]";
  cert.checks = derive_checks(cert);
  return out;
}

Quartering quarter(const Cycle& c) {
  const int l = c.length();
  if (l < 4) throw std::invalid_argument("quartering needs a cycle of length at least 4");
  const int k = l / 4;
  const auto& v = c.sequence();
  auto slice = [&](int a, int b) { return std::vector<Vertex>(v.begin() + a, v.begin() + b); };
  return {slice(0, k + 1), slice(k + 1, 2 * k), slice(2 * k, 3 * k + 1), slice(3 * k + 1, l)};
}

Outcome<CycleResult> shrink_cycle(const Graph& g, const Cycle& c, const Threshold& theta) {
  Certificate cert;
  cert.step = "shrink_cycle";
  cert.objects["cycle:C"] = c.sequence();
  cert.params["theta"] = theta.to_string();
  if (c.length() < 4) return fail(cert, "cycle too short to quarter");
  const Quartering parts = quarter(c);
  const VertexSet a(g.order(), parts.p1), b(g.order(), parts.p3);

  auto short_enough = [&](const std::vector<Vertex>& p) {
    return !p.empty() && static_cast<int>(p.size()) - 1 < cycle_distance(c, p.front(), p.back());
  };
  std::vector<Vertex> found;
  for (const auto& p : max_connector(g, a, b).paths)
    if (short_enough(p)) {
      found = p;
      break;
    }
  const VertexSet ends = a | b;
  for (std::size_t i = 0; i < parts.p1.size() && found.empty(); ++i) {
    for (std::size_t j = 0; j < parts.p3.size() && found.empty(); ++j) {
      VertexSet allowed = VertexSet::full(g.order()) - ends;
      allowed.insert(parts.p1[i]);
      allowed.insert(parts.p3[j]);
      auto p = bfs_path(g, allowed, parts.p1[i], parts.p3[j], false);
      if (short_enough(p)) found = std::move(p);
    }
  }
  if (found.empty()) return fail(cert, "no P1,P3-path shorter than the distance of its ends");
  cert.objects["path:T"] = found;

  auto shortened = shorten_cycle(g, c, Path(g, found));
  if (!succeeded(shortened)) return fail(cert, "shorten_cycle: " + std::get<HypothesisFailure>(shortened).reason());
  auto& res = std::get<CycleResult>(shortened);
  cert.objects["cycle:C'"] = res.cycle;
  cert.output = "|C'|=" + std::to_string(res.cycle.size());
  cert.checks = derive_checks(cert);
  return CycleResult{res.cycle, cert};
}

}  // namespace gallai
