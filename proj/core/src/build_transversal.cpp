#include "checks.hpp"

namespace gallai {

NotPairwiseIntersecting::NotPairwiseIntersecting(std::size_t i, std::size_t j, VertexSet a, VertexSet b)
    : std::invalid_argument("family is not pairwise intersecting: members " + std::to_string(i) + " " +
                            a.to_string() + " and " + std::to_string(j) + " " + b.to_string() + " are disjoint"),
      a_(std::move(a)),
      b_(std::move(b)) {}

namespace {

struct ClaimsOutcome {
  enum class Kind { extension, cycle, failure } kind = Kind::failure;
  VertexSet x, y;  // local ids, for extension
  std::vector<Vertex> cycle;
};

std::optional<std::size_t> first_avoiding(const SubdivisionFamily& fam, const VertexSet& s) {
  for (std::size_t i = 0; i < fam.vertex_sets.size(); ++i)
    if (!fam.vertex_sets[i].intersects(s)) return i;
  return std::nullopt;
}

class Driver {
 public:
  Driver(const Graph& g, const MultigraphPattern& m, const Threshold& theta, const BuildOptions& options)
      : g_(g), m_(m), theta_(theta), options_(options) {}

  BuildResult run() {
    const int n = g_.order();
    EnumerationOptions eo = sets_only(options_.enumeration);
    eo.allow_partial = false;
    const SubdivisionFamily fam = enumerate_maximum(g_, m_, eo);
    if (!fam.exhaustive) throw NonExhaustiveFamily();
    if (const auto pi = is_pairwise_intersecting(fam); !pi) {
      const auto [i, j] = *pi.witness;
      throw NotPairwiseIntersecting(i, j, fam.vertex_sets[i], fam.vertex_sets[j]);
    }
    Certificate enumerated;
    enumerated.step = "enumerate";
    enumerated.output = "count=" + std::to_string(fam.vertex_sets.size()) + ",mu=" + std::to_string(fam.mu);
    result_.trace.push_back(enumerated);

    VertexSet x(n), y(n);
    for (int round = 0; round <= n + 1; ++round) {
      if (is_transversal(y, fam)) return finish(fam, y, y, "y_transversal", std::nullopt);
      const InducedSubgraph sub = induced_subgraph(g_, VertexSet::full(n) - x);
      const SubdivisionFamily fam_h = restrict_family(fam, sub);
      const HittingResult hit = min_hitting_set(hitting_instance(fam_h), options_.solver);
      const int tau_h = hit.size();
      const std::int64_t m2 = static_cast<std::int64_t>(m_.size()) * m_.size();
      if (theta_.compare_scaled(m2, 1, tau_h) >= 0 || theta_.compare_scaled(4, 2, tau_h) >= 0)
        return finish(fam, y | sub.lift(hit.set, n), y, "small_tau", tau_h);

      const ClaimsOutcome out = claims(sub, fam_h, x);
      if (out.kind == ClaimsOutcome::Kind::failure) break;
      if (out.kind == ClaimsOutcome::Kind::cycle) {
        return finish(fam, y | sub.lift(VertexSet(sub.graph.order(), out.cycle), n), y, "cycle", tau_h);
      }
      x |= sub.lift(out.x, n);
      y |= sub.lift(out.y, n);
    }
    result_.fallback = true;
    return finish(fam, min_hitting_set(hitting_instance(fam), options_.solver).set, y, "fallback", std::nullopt);
  }

 private:
  void push(const Certificate& cert, const InducedSubgraph& sub, const VertexSet& x) {
    result_.trace.push_back(lift_certificate(cert, sub, x));
  }

  ClaimsOutcome claims(const InducedSubgraph& sub, const SubdivisionFamily& fam, const VertexSet& x) {
    const Graph& h = sub.graph;
    const int n = h.order();
    ClaimsOutcome result;

    auto base = base_cycle(h, fam, theta_);
    if (!succeeded(base)) {
      push(std::get<HypothesisFailure>(base).cert, sub, x);
      return result;
    }
    push(std::get<CycleResult>(base).cert, sub, x);
    std::vector<Vertex> c = std::get<CycleResult>(base).cycle;

    // Enlarge until C is a transversal (each step strictly lengthens C).
    for (int iter = 0; iter <= n; ++iter) {
      const auto q_index = first_avoiding(fam, VertexSet(n, c));
      if (!q_index) break;
      const Subdivision& q = fam.representatives[*q_index];
      auto ext = extend_pretransversal(h, fam, VertexSet(n, c), fam.vertex_sets[*q_index], theta_);
      if (!succeeded(ext)) {
        push(std::get<HypothesisFailure>(ext).cert, sub, x);
        return result;
      }
      auto& er = std::get<ExtendResult>(ext);
      if (auto* e = std::get_if<PretransversalExtension>(&er)) {
        push(e->cert, sub, x);
        return {ClaimsOutcome::Kind::extension, e->x, e->y, {}};
      }
      auto& none = std::get<NoSmallSeparator>(er);
      push(none.cert, sub, x);
      auto bigger = enlarge_cycle(h, Cycle(h, c), fam.pattern, q, none.connector);
      if (!succeeded(bigger)) {
        push(std::get<HypothesisFailure>(bigger).cert, sub, x);
        return result;
      }
      push(std::get<CycleResult>(bigger).cert, sub, x);
      c = std::get<CycleResult>(bigger).cycle;
    }
    if (!is_transversal(VertexSet(n, c), fam)) return result;

    // Shrink while the shorter cycle stays a transversal.
    for (int iter = 0; iter <= n; ++iter) {
      auto smaller = shrink_cycle(h, Cycle(h, c), theta_);
      if (!succeeded(smaller)) {
        push(std::get<HypothesisFailure>(smaller).cert, sub, x);
        break;
      }
      push(std::get<CycleResult>(smaller).cert, sub, x);
      const std::vector<Vertex> next = std::get<CycleResult>(smaller).cycle;
      const VertexSet next_set(n, next);
      if (is_transversal(next_set, fam)) {
        c = next;
        continue;
      }
      Certificate cap;
      cap.step = "claim3ii";
      cap.objects["cycle:C"] = next;
      cap.params["theta"] = theta_.to_string();
      cap.output = "non_transversal_cycle";
      cap.checks = derive_checks(cap);
      push(cap, sub, x);
      const auto q_index = first_avoiding(fam, next_set);
      auto ext = extend_pretransversal(h, fam, next_set, fam.vertex_sets[*q_index], theta_);
      if (!succeeded(ext)) {
        push(std::get<HypothesisFailure>(ext).cert, sub, x);
        break;
      }
      auto& er = std::get<ExtendResult>(ext);
      if (auto* e = std::get_if<PretransversalExtension>(&er)) {
        push(e->cert, sub, x);
        return {ClaimsOutcome::Kind::extension, e->x, e->y, {}};
      }
      auto& none = std::get<NoSmallSeparator>(er);
      push(none.cert, sub, x);
      push(inner_path_stats(fam.pattern, fam.representatives[*q_index], none.connector).cert, sub, x);
      break;
    }
    return {ClaimsOutcome::Kind::cycle, {}, {}, c};
  }

  BuildResult finish(const SubdivisionFamily& fam, const VertexSet& s, const VertexSet& y, const std::string& mode,
                     std::optional<int> tau_h) {
    const int n = g_.order();
    const int m = m_.size();
    Certificate cert;
    cert.step = "assemble";
    cert.objects["set:S"] = s.to_vector();
    cert.objects["set:Y"] = y.to_vector();
    cert.params["n"] = std::to_string(n);
    cert.params["m"] = std::to_string(m);
    cert.params["theta"] = theta_.to_string();
    cert.params["mode_small"] = mode == "small_tau" ? "1" : "0";
    if (tau_h) cert.params["tau_H"] = std::to_string(*tau_h);
    cert.output = "mode=" + mode + ",|S|=" + std::to_string(s.count());
    cert.checks = derive_checks(cert);
    result_.trace.push_back(cert);

    result_.transversal = s;
    result_.y = y;
    result_.valid = is_transversal(s, fam);
    result_.bound_applies = theorem_bound_applies(n, m);
    result_.within_bound = within_theorem_bound(s.count(), n, m);
    return result_;
  }

  const Graph& g_;
  const MultigraphPattern& m_;
  Threshold theta_;
  const BuildOptions& options_;
  BuildResult result_;
};

}  // namespace

BuildResult build_transversal(const Graph& g, const MultigraphPattern& m, const Threshold& theta,
                              const BuildOptions& options) {
  if (g.order() == 0) throw std::invalid_argument("build_transversal needs a nonempty graph");
  return Driver(g, m, theta, options).run();
}

}  // namespace gallai
