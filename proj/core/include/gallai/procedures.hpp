#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gallai/menger.hpp"
#include "gallai/path.hpp"
#include "gallai/subdivision.hpp"
#include "gallai/threshold.hpp"
#include "gallai/transversal.hpp"

namespace gallai {

/// One evaluated inequality. Sides are rendered numbers or threshold
/// expressions such as `4*cbrt(12)^2`.
struct Check {
  std::string label;
  std::string lhs;
  std::string op;
  std::string rhs;
  bool holds = false;
  /// Informational checks are recorded but do not decide success.
  bool required = true;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Record of one procedure call. Objects are named vertex sequences whose
/// name prefix says how to validate them: `cycle:`, `path:`, `set:` or `seq:`.
/// `set:removed` (when present) is deleted from the host before validation.
struct Certificate {
  std::string step;
  std::string failure;  // empty when the hypotheses held
  std::string output;
  std::vector<Check> checks;
  std::map<std::string, std::vector<Vertex>> objects;
  std::map<std::string, std::string> params;

  bool ok() const noexcept { return failure.empty(); }
};

/// Unmet hypothesis of a procedure, naming the step and inequality.
struct HypothesisFailure {
  Certificate cert;
  const std::string& reason() const noexcept { return cert.failure; }
};

template <typename T>
using Outcome = std::variant<T, HypothesisFailure>;

template <typename T>
bool succeeded(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

/// Recomputes every check of `cert` from its objects and params.
std::vector<Check> derive_checks(const Certificate& cert);

struct RecheckResult {
  bool ok = true;
  std::string problem;
  explicit operator bool() const noexcept { return ok; }
};

/// Validates the objects against G (minus `set:removed`), re-derives the
/// checks and compares them with the recorded ones.
RecheckResult recheck(const Certificate& cert, const Graph& g);

/// `step=<name> hypothesis=<ok|fail:reason> output=<summary> check=<label:lhs op rhs;...>`
std::string trace_line(const Certificate& cert);

/// Maps a certificate on an induced subgraph back to parent ids and records
/// the deleted vertices as `set:removed`.
Certificate lift_certificate(const Certificate& cert, const InducedSubgraph& sub, const VertexSet& removed);

// ---------------------------------------------------------------------------

struct RerouteChoice {
  int index = 1;  // 1 or 3
  std::array<int, 4> lengths{};
  Certificate cert;
};

/// Cut points c1..c4 in cyclic order split C into P1 = c1..c2, ..., P4 = c4..c1,
/// each with at least one edge. Returns the smallest i in {1,3} with ||P_i||
/// shorter than the rest of C. Throws std::invalid_argument on a malformed split.
RerouteChoice reroute_choice(const Cycle& c, const std::array<Vertex, 4>& cuts);

struct CycleResult {
  std::vector<Vertex> cycle;
  Certificate cert;
};

/// Given a C-path P with ||P|| < d_C(x,y), a cycle C' with |C|/2 < |C'| < |C|.
Outcome<CycleResult> shorten_cycle(const Graph& g, const Cycle& c, const Path& p);

struct PretransversalExtension {
  VertexSet x;
  VertexSet y;
  Certificate cert;
};

struct NoSmallSeparator {
  Connector connector;
  VertexSet separator;
  Certificate cert;
};

using ExtendResult = std::variant<PretransversalExtension, NoSmallSeparator>;

/// Either a small A,B-separator Y' with the pretransversal extension (X', Y'),
/// or the connector certifying that no such separator exists. Throws
/// std::invalid_argument when A and B meet or are empty.
Outcome<ExtendResult> extend_pretransversal(const Graph& h, const SubdivisionFamily& family, const VertexSet& a,
                                            const VertexSet& b, const Threshold& theta);

/// A cycle longer than m*theta through part of a maximum member.
Outcome<CycleResult> base_cycle(const Graph& h, const SubdivisionFamily& family, const Threshold& theta);

/// Reroutes C through Q along two connector paths that end on the same
/// pattern edge; succeeds only when the new cycle is longer.
Outcome<CycleResult> enlarge_cycle(const Graph& g, const Cycle& c, const MultigraphPattern& m, const Subdivision& q,
                                   const Connector& t);

struct InnerPathStats {
  std::vector<int> hits;  // h_e per pattern edge
  std::vector<std::vector<std::vector<Vertex>>> inner;
  std::vector<std::vector<std::vector<Vertex>>> outer;
  int total_inner = 0;
  Certificate cert;
};

/// Pattern edge of Q carrying host vertex y: the edge whose interior holds y,
/// or the smallest incident edge index for a branch vertex; -1 if y is off Q.
int owning_edge(const MultigraphPattern& m, const Subdivision& q, Vertex y);

/// Splits each Q_e at the connector endpoints on it. Throws
/// std::invalid_argument when a connector path does not end on Q.
InnerPathStats inner_path_stats(const MultigraphPattern& m, const Subdivision& q, const Connector& t);

/// Quartering: with l = |C| = 4k + r, P1 = v1..v_{k+1}, P3 = v_{2k+1}..v_{3k+1}.
struct Quartering {
  std::vector<Vertex> p1, p2, p3, p4;
};
Quartering quarter(const Cycle& c);

/// Searches a P1,P3-path T with ||T|| shorter than the distance of its ends on
/// C, then shortens C along it.
Outcome<CycleResult> shrink_cycle(const Graph& g, const Cycle& c, const Threshold& theta);

class NotPairwiseIntersecting : public std::invalid_argument {
 public:
  NotPairwiseIntersecting(std::size_t i, std::size_t j, VertexSet a, VertexSet b);
  std::pair<VertexSet, VertexSet> witness() const { return {a_, b_}; }

 private:
  VertexSet a_, b_;
};

struct BuildOptions {
  EnumerationOptions enumeration;
  SolverOptions solver;
};

struct BuildResult {
  VertexSet transversal;
  VertexSet y;
  bool fallback = false;
  bool valid = false;
  /// |S| against max{5n^(2/3), 2m^2 n^(1/3)}; meaningful when m^3 < n.
  bool bound_applies = false;
  bool within_bound = false;
  std::vector<Certificate> trace;
};

/// Pretransversal loop, base cycle, enlarge until transversal, shrink while
/// possible. Throws NotPairwiseIntersecting or NonExhaustiveFamily.
BuildResult build_transversal(const Graph& g, const MultigraphPattern& m, const Threshold& theta,
                              const BuildOptions& options = {});

// ---------------------------------------------------------------------------

struct IntersectionMultigraph {
  int pattern_size = 0;
  /// (Q-side pattern edge, R-side pattern edge), one per connector path.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> cut_edges;

  bool is_simple() const;
  /// No (e,e) for a cut edge e, and not both (e,e') and (e',e).
  bool respects_cut_edges() const;
};

IntersectionMultigraph intersection_multigraph(const MultigraphPattern& m, const Subdivision& q, const Subdivision& r,
                                               const Connector& t, int universe);

/// m^2 - c*m + C(c,2) with c the number of cut edges.
int prop1_bound(const MultigraphPattern& m);

struct Prop1Report {
  bool pairwise_intersecting = true;
  bool holds = true;
  int connectivity = 0;
  int bound = 0;
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  VertexSet separator;
  std::optional<IntersectionMultigraph> multigraph;
  /// Disjoint pairs whose intersection multigraph was built and checked.
  std::size_t pairs_checked = 0;
  bool pairs_truncated = false;
  std::string summary;
};

Prop1Report verify_prop1(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options = {});
/// Same, on an already enumerated family; at most `pair_limit` disjoint pairs are examined.
Prop1Report verify_prop1(const Graph& g, const SubdivisionFamily& family, std::size_t pair_limit = 4096);

}  // namespace gallai
