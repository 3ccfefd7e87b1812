#include "gallai/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gallai {

namespace {

std::vector<int> reach(const MultigraphPattern& m, int removed, int start) {
  std::vector<char> seen(static_cast<std::size_t>(m.order()), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int i = 0; i < m.size(); ++i) {
      if (i == removed) continue;
      const auto& e = m.edge(i);
      int other = -1;
      if (e.u == u) other = e.v;
      else if (e.v == u) other = e.u;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < m.order(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace

MultigraphPattern::MultigraphPattern(int order, std::vector<PatternEdge> edges, std::string name)
    : w_(order), edges_(std::move(edges)), name_(std::move(name)) {
  if (w_ < 1) throw std::invalid_argument("pattern needs at least one vertex");
  if (edges_.empty()) throw std::invalid_argument("pattern needs at least one edge");
  for (const auto& e : edges_)
    if (e.u < 0 || e.u >= w_ || e.v < 0 || e.v >= w_)
      throw std::invalid_argument("pattern edge endpoint out of range");
  if (static_cast<int>(reach(*this, -1, 0).size()) != w_)
    throw std::invalid_argument("pattern multigraph is disconnected");
}

int MultigraphPattern::degree(int u) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == u) + (e.v == u);
  return d;
}

std::vector<int> MultigraphPattern::incident_edges(int u) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (edges_[i].u == u || edges_[i].v == u) out.push_back(i);
  return out;
}

bool MultigraphPattern::is_k2() const noexcept {
  return w_ == 2 && edges_.size() == 1 && !edges_[0].is_loop();
}

bool MultigraphPattern::is_c1() const noexcept {
  return w_ == 1 && edges_.size() == 1;
}

std::vector<int> component_without_edge(const MultigraphPattern& m, int removed, int start) {
  return reach(m, removed, start);
}

std::vector<int> cut_edges(const MultigraphPattern& m) {
  // Tarjan low-link over edge ids so that parallel edges are handled.
  const int w = m.order();
  std::vector<int> disc(static_cast<std::size_t>(w), -1), low(static_cast<std::size_t>(w), 0);
  std::vector<int> bridges;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (int i = 0; i < m.size(); ++i) {
      const auto& e = m.edge(i);
      if (e.is_loop() || i == parent_edge) continue;
      int other = -1;
      if (e.u == u) other = e.v;
      else if (e.v == u) other = e.u;
      if (other < 0) continue;
      if (disc[other] < 0) {
        dfs(other, i);
        low[u] = std::min(low[u], low[other]);
        if (low[other] > disc[u]) bridges.push_back(i);
      } else {
        low[u] = std::min(low[u], disc[other]);
      }
    }
  };
  dfs(0, -1);
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace gallai
