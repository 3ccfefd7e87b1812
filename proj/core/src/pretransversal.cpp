#include "checks.hpp"

namespace gallai {

Outcome<ExtendResult> extend_pretransversal(const Graph& h, const SubdivisionFamily& family, const VertexSet& a,
                                            const VertexSet& b, const Threshold& theta) {
  if (a.empty() || b.empty()) throw std::invalid_argument("A and B must be nonempty");
  if (a.intersects(b)) throw std::invalid_argument("A and B must be disjoint");

  Certificate cert;
  cert.step = "extend_pretransversal";
  cert.objects["set:A"] = a.to_vector();
  cert.objects["set:B"] = b.to_vector();
  cert.params["theta"] = theta.to_string();
  if (!family.exhaustive) {
    cert.failure = "family not exhaustive";
    return HypothesisFailure{cert};
  }
  if (const auto pi = is_pairwise_intersecting(family); !pi) {
    cert.failure = "family not pairwise intersecting: " + family.vertex_sets[pi.witness->first].to_string() + "," +
                   family.vertex_sets[pi.witness->second].to_string();
    return HypothesisFailure{cert};
  }

  const int s = std::min(a.count(), b.count());
  const VertexSet sep = min_separator(h, a, b);
  cert.objects["set:Y'"] = sep.to_vector();

  if (theta.scaled_less(sep.count(), 1, s)) {
    // Members avoiding Y' are connected and pairwise meet, so they share one
    // component H' of H - Y'.
    VertexSet keep(h.order());
    for (const auto& vs : family.vertex_sets) {
      if (vs.intersects(sep)) continue;
      const Vertex start = vs.first();
      keep = reachable(h, VertexSet(h.order(), {start}), sep);
      break;
    }
    VertexSet x = VertexSet::full(h.order()) - keep;
    cert.objects["set:X'"] = x.to_vector();
    cert.output = "X'=" + x.to_string() + ",Y'=" + sep.to_string();
    cert.checks = derive_checks(cert);
    return ExtendResult{PretransversalExtension{x, sep, cert}};
  }

  Connector k = max_connector(h, a, b);
  for (std::size_t i = 0; i < k.paths.size(); ++i) cert.objects["path:K" + std::to_string(i)] = k.paths[i];
  cert.output = "connector=" + std::to_string(k.size());
  cert.checks = derive_checks(cert);
  return ExtendResult{NoSmallSeparator{std::move(k), sep, cert}};
}

}  // namespace gallai
