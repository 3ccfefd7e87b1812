#include <algorithm>

#include "gallai/transversal.hpp"

namespace gallai {

const char* to_string(LowerBoundKind kind) noexcept {
  switch (kind) {
    case LowerBoundKind::empty_family: return "empty_family";
    case LowerBoundKind::disjoint_family: return "disjoint_family";
    case LowerBoundKind::branch_and_bound: return "branch_and_bound";
  }
  return "unknown";
}

namespace {

class Solver {
 public:
  Solver(const HittingInstance& inst, std::uint64_t budget) : inst_(inst), budget_(budget) {}

  VertexSet solve() {
    const int n = inst_.universe;
    best_ = greedy();
    std::vector<std::size_t> open(inst_.sets.size());
    for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
    VertexSet chosen(n), excluded(n);
    search(open, chosen, excluded);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Greedy packing of pairwise-disjoint sets (restricted to allowed vertices).
  std::vector<std::size_t> packing(const std::vector<std::size_t>& open, const VertexSet& excluded) const {
    std::vector<std::pair<int, std::size_t>> by_size;
    for (std::size_t i : open) by_size.emplace_back((inst_.sets[i] - excluded).count(), i);
    std::sort(by_size.begin(), by_size.end());
    std::vector<std::size_t> picked;
    VertexSet covered(inst_.universe);
    for (auto [size, i] : by_size) {
      const VertexSet eff = inst_.sets[i] - excluded;
      if (eff.intersects(covered)) continue;
      covered |= eff;
      picked.push_back(i);
    }
    return picked;
  }

 private:
  VertexSet greedy() const {
    VertexSet chosen(inst_.universe);
    std::vector<std::size_t> open(inst_.sets.size());
    for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
    while (!open.empty()) {
      const Vertex v = most_frequent(open, VertexSet(inst_.universe));
      chosen.insert(v);
      std::erase_if(open, [&](std::size_t i) { return inst_.sets[i].contains(v); });
    }
    return chosen;
  }

  Vertex most_frequent(const std::vector<std::size_t>& open, const VertexSet& excluded) const {
    std::vector<int> freq(static_cast<std::size_t>(inst_.universe), 0);
    for (std::size_t i : open) inst_.sets[i].for_each([&](Vertex v) { ++freq[v]; });
    Vertex best = -1;
    for (Vertex v = 0; v < inst_.universe; ++v)
      if (!excluded.contains(v) && freq[v] > 0 && (best < 0 || freq[v] > freq[best])) best = v;
    return best;
  }

  void search(const std::vector<std::size_t>& open, VertexSet& chosen, VertexSet& excluded) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_, std::nullopt);
    if (open.empty()) {
      if (chosen.count() < best_.count()) best_ = chosen;
      return;
    }
    for (std::size_t i : open)
      if ((inst_.sets[i] - excluded).empty()) return;
    if (chosen.count() + static_cast<int>(packing(open, excluded).size()) >= best_.count()) return;

    const Vertex v = most_frequent(open, excluded);
    std::vector<std::size_t> rest;
    for (std::size_t i : open)
      if (!inst_.sets[i].contains(v)) rest.push_back(i);
    chosen.insert(v);
    search(rest, chosen, excluded);
    chosen.erase(v);

    excluded.insert(v);
    search(open, chosen, excluded);
    excluded.erase(v);
  }

  const HittingInstance& inst_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexSet best_;
};

// Exact search for `target` pairwise-disjoint sets, within a small budget.
bool find_packing(const HittingInstance& inst, std::size_t from, int target, VertexSet& covered,
                  std::vector<std::size_t>& picked, std::uint64_t& budget) {
  if (static_cast<int>(picked.size()) == target) return true;
  for (std::size_t i = from; i < inst.sets.size(); ++i) {
    if (budget == 0) return false;
    --budget;
    if (inst.sets[i].intersects(covered)) continue;
    covered |= inst.sets[i];
    picked.push_back(i);
    if (find_packing(inst, i + 1, target, covered, picked, budget)) return true;
    picked.pop_back();
    covered -= inst.sets[i];
  }
  return false;
}

}  // namespace

HittingResult min_hitting_set(const HittingInstance& instance, const SolverOptions& options) {
  if (!instance.exhaustive) throw NonExhaustiveFamily();
  for (const auto& s : instance.sets) {
    if (s.empty()) throw std::invalid_argument("hitting set instance contains an empty set");
    if (s.universe() != instance.universe) throw std::invalid_argument("hitting set member has the wrong universe");
  }
  HittingResult result;
  if (instance.sets.empty()) {
    result.set = VertexSet(instance.universe);
    return result;
  }
  Solver solver(instance, options.node_budget);
  result.set = solver.solve();
  result.nodes = solver.nodes();

  std::vector<std::size_t> all(instance.sets.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto greedy = solver.packing(all, VertexSet(instance.universe));
  if (static_cast<int>(greedy.size()) >= result.size()) {
    greedy.resize(static_cast<std::size_t>(result.size()));
    result.certificate = LowerBoundKind::disjoint_family;
    result.disjoint = greedy;
    return result;
  }
  VertexSet covered(instance.universe);
  std::vector<std::size_t> picked;
  std::uint64_t budget = 200'000;
  if (find_packing(instance, 0, result.size(), covered, picked, budget)) {
    result.certificate = LowerBoundKind::disjoint_family;
    result.disjoint = picked;
  } else {
    result.certificate = LowerBoundKind::branch_and_bound;
  }
  return result;
}

}  // namespace gallai
