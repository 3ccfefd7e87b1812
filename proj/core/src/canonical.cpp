#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gallai/constructions.hpp"

namespace gallai {

namespace {

using Code = unsigned __int128;

std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig.emplace_back(std::move(s), v);
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int classes = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++classes;
      next[sig[i].second] = classes;
    }
    const int before = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
    color = next;
    if (classes + 1 == before) break;
  }
  return color;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), total_(n_ * (n_ - 1) / 2) {
    const auto color = refine(g);
    order_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
    cell_of_position_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) cell_of_position_[p] = color[order_[p]];
    color_ = color;
    placed_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  void run() { place(0, 0); }
  Code best() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // Bit for pair (i, j), i < j, in column-major order; the first pair is the
  // most significant so integer order matches lexicographic order.
  int shift(int i, int j) const { return total_ - 1 - (j * (j - 1) / 2 + i); }

  void place(int pos, Code code) {
    if (pos == n_) {
      if (!have_ || code < best_) {
        best_ = code;
        best_order_ = placed_;
        have_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_of_position_[pos]) continue;
      Code next = code;
      for (int i = 0; i < pos; ++i)
        if (g_.adjacent(placed_[i], v)) next |= Code{1} << shift(i, pos);
      if (have_) {
        const int low = pos == 0 ? total_ : shift(pos - 1, pos);
        if (low < 128 && (next >> low) > (best_ >> low)) continue;
      }
      used_[v] = true;
      placed_[pos] = v;
      place(pos + 1, next);
      used_[v] = false;
      placed_[pos] = -1;
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<Vertex> order_;
  std::vector<int> cell_of_position_;
  std::vector<int> color_;
  std::vector<Vertex> placed_;
  std::vector<bool> used_;
  Code best_ = 0;
  bool have_ = false;
  std::vector<Vertex> best_order_;
};

}  // namespace

unsigned __int128 canonical_code(const Graph& g) {
  if (g.order() > 16) throw std::invalid_argument("canonical_code supports at most 16 vertices");
  if (g.order() <= 1) return 0;
  Search s(g);
  s.run();
  return s.best();
}

Graph canonical_graph(const Graph& g) {
  if (g.order() > 16) throw std::invalid_argument("canonical_graph supports at most 16 vertices");
  if (g.order() <= 1) return g;
  Search s(g);
  s.run();
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()));
  const auto& order = s.best_order();
  for (int p = 0; p < g.order(); ++p) position[order[p]] = p;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(Edge{position[e.u], position[e.v]}.normalized());
  return Graph(g.order(), edges);
}

}  // namespace gallai
