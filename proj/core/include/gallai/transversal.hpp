#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gallai/subdivision.hpp"

namespace gallai {

/// Sets to hit, all inside {0, ..., universe-1}.
struct HittingInstance {
  int universe = 0;
  std::vector<VertexSet> sets;
  bool exhaustive = true;
};

HittingInstance hitting_instance(const SubdivisionFamily& family);

class NonExhaustiveFamily : public std::invalid_argument {
 public:
  NonExhaustiveFamily() : std::invalid_argument("family is not exhaustive; exact transversal questions refused") {}
};

enum class LowerBoundKind {
  empty_family,      // nothing to hit
  disjoint_family,   // `disjoint` holds |set| pairwise-disjoint members
  branch_and_bound,  // search closed without a matching packing
};

const char* to_string(LowerBoundKind kind) noexcept;

struct HittingResult {
  VertexSet set;
  LowerBoundKind certificate = LowerBoundKind::empty_family;
  /// Indices of pairwise-disjoint instance sets (for disjoint_family).
  std::vector<std::size_t> disjoint;
  std::uint64_t nodes = 0;
  int size() const { return set.count(); }
};

struct SolverOptions {
  std::uint64_t node_budget = 100'000'000;
};

/// Exact minimum hitting set. Throws NonExhaustiveFamily, BudgetExceeded, or
/// std::invalid_argument for an empty member.
HittingResult min_hitting_set(const HittingInstance& instance, const SolverOptions& options = {});

struct TauResult {
  int tau = 0;
  VertexSet witness;
  LowerBoundKind certificate = LowerBoundKind::empty_family;
  SubdivisionFamily family;
};

/// tau(M, G) together with the enumerated family.
TauResult tau(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options = {},
              const SolverOptions& solver = {});
/// Gal(G) = tau(K2, G).
TauResult gallai_number(const Graph& g, const EnumerationOptions& options = {}, const SolverOptions& solver = {});

struct IntersectionCheck {
  bool ok = true;
  /// Indices into vertex_sets of a disjoint pair when !ok.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  explicit operator bool() const noexcept { return ok; }
};

IntersectionCheck is_pairwise_intersecting(const SubdivisionFamily& family);
bool is_transversal(const VertexSet& s, const SubdivisionFamily& family);

/// `tau=<k> witness=<sorted list> lower_bound_certificate=<kind>`
std::string transversal_report(const HittingResult& result);
std::string transversal_report(const TauResult& result);

/// m^3 < n, the regime where the size bound below is claimed.
bool theorem_bound_applies(int n, int m);
/// s <= max{5 n^(2/3), 2 m^2 n^(1/3)}, compared exactly via cubes.
bool within_theorem_bound(int s, int n, int m);

}  // namespace gallai
