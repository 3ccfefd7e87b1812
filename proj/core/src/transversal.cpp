#include "gallai/transversal.hpp"

namespace gallai {

HittingInstance hitting_instance(const SubdivisionFamily& family) {
  return {family.universe, family.vertex_sets, family.exhaustive};
}

TauResult tau(const Graph& g, const MultigraphPattern& m, const EnumerationOptions& options,
              const SolverOptions& solver) {
  EnumerationOptions opts = sets_only(options);
  opts.allow_partial = false;
  SubdivisionFamily family = enumerate_maximum(g, m, opts);
  const HittingResult hit = min_hitting_set(hitting_instance(family), solver);
  return {hit.size(), hit.set, hit.certificate, std::move(family)};
}

TauResult gallai_number(const Graph& g, const EnumerationOptions& options, const SolverOptions& solver) {
  return tau(g, MultigraphPattern(2, {{0, 1}}, "K2"), options, solver);
}

IntersectionCheck is_pairwise_intersecting(const SubdivisionFamily& family) {
  if (!family.exhaustive) throw NonExhaustiveFamily();
  const auto& sets = family.vertex_sets;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) return {false, std::make_pair(i, j)};
  return {};
}

bool is_transversal(const VertexSet& s, const SubdivisionFamily& family) {
  for (const auto& vs : family.vertex_sets)
    if (!vs.intersects(s)) return false;
  return true;
}

std::string transversal_report(const HittingResult& result) {
  return "tau=" + std::to_string(result.size()) + " witness=" + result.set.to_string() +
         " lower_bound_certificate=" + to_string(result.certificate);
}

std::string transversal_report(const TauResult& result) {
  return "tau=" + std::to_string(result.tau) + " witness=" + result.witness.to_string() +
         " lower_bound_certificate=" + to_string(result.certificate);
}

bool theorem_bound_applies(int n, int m) {
  const __int128 mm = m;
  return mm * mm * mm < n;
}

bool within_theorem_bound(int s, int n, int m) {
  const __int128 s3 = static_cast<__int128>(s) * s * s;
  const __int128 nn = n;
  const __int128 m2 = static_cast<__int128>(m) * m;
  return s3 <= 125 * nn * nn || s3 <= 8 * m2 * m2 * m2 * nn;
}

}  // namespace gallai
