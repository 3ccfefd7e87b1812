#include "gallai/menger.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <queue>
#include <stdexcept>

namespace gallai {

namespace {

// Vertex-split network: in(v) = 2v, out(v) = 2v + 1, source 2n, sink 2n + 1.
class SplitNetwork {
 public:
  static constexpr int kDeleted = 0;
  static constexpr int kUnit = 1;
  static constexpr int kUncuttable = -1;

  SplitNetwork(const Graph& g, const VertexSet& a, const VertexSet& b, const std::vector<int>& vertex_caps)
      : n_(g.order()), head_(static_cast<std::size_t>(2 * n_ + 2), -1) {
    const int inf = n_ + 1;
    for (Vertex v = 0; v < n_; ++v) {
      const int c = vertex_caps[v] == kUncuttable ? inf : vertex_caps[v];
      add(2 * v, 2 * v + 1, c);
    }
    for (const auto& e : g.edges()) {
      add(2 * e.u + 1, 2 * e.v, inf);
      add(2 * e.v + 1, 2 * e.u, inf);
    }
    a.for_each([&](Vertex v) { add(source(), 2 * v, inf); });
    b.for_each([&](Vertex v) { add(2 * v + 1, sink(), inf); });
  }

  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  /// Edmonds-Karp, stopping once the flow reaches `limit`.
  int run(int limit = INT_MAX) {
    int flow = 0;
    const std::size_t nodes = head_.size();
    std::vector<int> via(nodes);
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source());
      via[source()] = -2;
      while (!q.empty() && via[sink()] == -1) {
        const int u = q.front();
        q.pop();
        for (int arc = head_[u]; arc >= 0; arc = next_[arc]) {
          const int w = to_[arc];
          if (cap_[arc] > 0 && via[w] == -1) {
            via[w] = arc;
            q.push(w);
          }
        }
      }
      if (via[sink()] == -1) break;
      int push = INT_MAX;
      for (int w = sink(); w != source(); w = to_[via[w] ^ 1]) push = std::min(push, cap_[via[w]]);
      push = std::min(push, limit - flow);
      for (int w = sink(); w != source(); w = to_[via[w] ^ 1]) {
        cap_[via[w]] -= push;
        cap_[via[w] ^ 1] += push;
      }
      flow += push;
    }
    return flow;
  }

  /// Vertex sequences carried by the flow, source to sink.
  std::vector<std::vector<Vertex>> walks() {
    std::vector<std::vector<Vertex>> out;
    for (int arc = head_[source()]; arc >= 0; arc = next_[arc]) {
      while (flow_on(arc) > 0) {
        std::vector<Vertex> seq;
        take(arc);
        int u = to_[arc];
        while (u != sink()) {
          if (u % 2 == 0) seq.push_back(u / 2);
          int chosen = -1;
          for (int a2 = head_[u]; a2 >= 0; a2 = next_[a2])
            if ((a2 % 2 == 0) && flow_on(a2) > 0) {
              chosen = a2;
              break;
            }
          assert(chosen >= 0);
          take(chosen);
          u = to_[chosen];
        }
        out.push_back(std::move(seq));
      }
    }
    return out;
  }

  /// Network nodes reachable from the source in the residual graph.
  std::vector<bool> residual_reach() const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{source()};
    seen[source()] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int arc = head_[u]; arc >= 0; arc = next_[arc])
        if (cap_[arc] > 0 && !seen[to_[arc]]) {
          seen[to_[arc]] = true;
          stack.push_back(to_[arc]);
        }
    }
    return seen;
  }

 private:
  void add(int u, int v, int c) {
    to_.push_back(v);
    cap_.push_back(c);
    original_.push_back(c);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(0);
    original_.push_back(0);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }
  int flow_on(int arc) const { return original_[arc] - cap_[arc]; }
  void take(int arc) { ++cap_[arc]; }

  int n_;
  std::vector<int> head_;
  std::vector<int> to_, cap_, original_, next_;
};

void require_nonempty(const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("connector endpoints A and B must be nonempty");
}

std::vector<int> unit_caps(int n) { return std::vector<int>(static_cast<std::size_t>(n), SplitNetwork::kUnit); }

std::vector<Vertex> trim(const std::vector<Vertex>& walk, const VertexSet& a, const VertexSet& b) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < walk.size(); ++k)
    if (a.contains(walk[k])) i = k;
  std::size_t j = i;
  while (!b.contains(walk[j])) ++j;
  return {walk.begin() + static_cast<std::ptrdiff_t>(i), walk.begin() + static_cast<std::ptrdiff_t>(j) + 1};
}

}  // namespace

bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
  return !reachable(g, a - s, s).intersects(b);
}

int connector_size(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_nonempty(a, b);
  SplitNetwork net(g, a, b, unit_caps(g.order()));
  return net.run();
}

Connector max_connector(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_nonempty(a, b);
  SplitNetwork net(g, a, b, unit_caps(g.order()));
  net.run();
  Connector c;
  for (const auto& walk : net.walks()) c.paths.push_back(trim(walk, a, b));
  std::sort(c.paths.begin(), c.paths.end());
  return c;
}

VertexSet min_separator(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_nonempty(a, b);
  const int n = g.order();
  const int k = connector_size(g, a, b);
  // Greedy in increasing vertex order: keep v when a minimum separator still
  // exists containing the chosen vertices plus v and avoiding the rejected ones.
  std::vector<int> caps = unit_caps(n);
  VertexSet chosen(n);
  for (Vertex v = 0; v < n && chosen.count() < k; ++v) {
    const int need = k - chosen.count() - 1;
    caps[v] = SplitNetwork::kDeleted;
    SplitNetwork net(g, a, b, caps);
    if (net.run(need + 1) == need) {
      chosen.insert(v);
    } else {
      caps[v] = SplitNetwork::kUncuttable;
    }
  }
  assert(chosen.count() == k);
  assert(separates(g, a, b, chosen));
  return chosen;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;
  int best = g.min_degree();
  for (Vertex u = 0; u < n && best > 0; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      std::vector<int> caps = unit_caps(n);
      caps[u] = caps[v] = SplitNetwork::kUncuttable;
      SplitNetwork net(g, VertexSet(n, {u}), VertexSet(n, {v}), caps);
      best = std::min(best, net.run(best));
    }
  }
  return best;
}

}  // namespace gallai
