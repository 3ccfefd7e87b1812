#include <algorithm>

#include "checks.hpp"

namespace gallai {

RerouteChoice reroute_choice(const Cycle& c, const std::array<Vertex, 4>& cuts) {
  const int l = c.length();
  std::array<int, 4> pos{};
  for (int i = 0; i < 4; ++i) {
    pos[i] = c.index_of(cuts[i]);
    if (pos[i] < 0) throw std::invalid_argument("cut point " + std::to_string(cuts[i]) + " is not on the cycle");
  }
  RerouteChoice r;
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    r.lengths[i] = ((pos[(i + 1) % 4] - pos[i]) % l + l) % l;
    if (r.lengths[i] < 1) throw std::invalid_argument("every arc of the split needs at least one edge");
    total += r.lengths[i];
  }
  if (total != l) throw std::invalid_argument("cut points are not in cyclic order");
  r.index = r.lengths[0] < l - r.lengths[0] ? 1 : 3;
  if (r.lengths[r.index - 1] >= l - r.lengths[r.index - 1])
    throw std::logic_error("reroute_choice: neither opposite arc is short");

  r.cert.step = "reroute_choice";
  r.cert.objects["cycle:C"] = c.sequence();
  r.cert.objects["seq:cuts"] = {cuts.begin(), cuts.end()};
  r.cert.params["index"] = std::to_string(r.index);
  r.cert.output = "P" + std::to_string(r.index);
  r.cert.checks = derive_checks(r.cert);
  return r;
}

Outcome<CycleResult> shorten_cycle(const Graph& g, const Cycle& c, const Path& p) {
  Certificate cert;
  cert.step = "shorten_cycle";
  cert.objects["cycle:C"] = c.sequence();
  cert.objects["path:P"] = p.sequence();
  const Vertex x = p.front(), y = p.back();
  if (!c.contains(x) || !c.contains(y) || x == y) {
    cert.failure = "path ends are not two distinct cycle vertices";
    return HypothesisFailure{cert};
  }
  if (p.length() >= cycle_distance(c, x, y)) {
    cert.failure = "path not shorter than cycle distance";
    cert.checks = derive_checks(cert);
    return HypothesisFailure{cert};
  }
  // Split P at its vertices on C; some segment is shorter than the distance
  // of its own ends, by the triangle inequality along C.
  std::vector<int> cuts;
  for (int i = 0; i < p.order(); ++i)
    if (c.contains(p.at(i))) cuts.push_back(i);
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const Vertex a = p.at(cuts[k - 1]), b = p.at(cuts[k]);
    const int len = cuts[k] - cuts[k - 1];
    if (len >= cycle_distance(c, a, b)) continue;
    const Path seg = p.subpath(g, cuts[k - 1], cuts[k]);
    std::vector<Vertex> cycle = longer_arc(g, c, b, a).sequence();
    for (int i = 1; i + 1 < seg.order(); ++i) cycle.push_back(seg.at(i));
    CycleResult out{cycle, cert};
    out.cert.objects["path:segment"] = seg.sequence();
    out.cert.objects["cycle:C'"] = cycle;
    out.cert.output = "|C'|=" + std::to_string(cycle.size());
    out.cert.checks = derive_checks(out.cert);
    return out;
  }
  throw std::logic_error("shorten_cycle: no qualifying segment despite ||P|| < d_C(x,y)");
}

}  // namespace gallai
