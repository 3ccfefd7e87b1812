#include "verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gallai/constructions.hpp"
#include "gallai/procedures.hpp"
#include "gallai/text_format.hpp"

namespace gallai::cli {

namespace {

void note_violation(SuiteReport& r, const Graph& g, std::string what) {
  if (!r.reproducer) {
    r.reproducer = serialize(g);
    r.detail = std::move(what);
  }
  ++r.violations;
}

void tally_bound(SuiteReport& r, const SubdivisionFamily& fam, int n, const SolverOptions& solver) {
  const int m = fam.pattern.size();
  if (!theorem_bound_applies(n, m) || fam.empty()) return;
  const int t = min_hitting_set(hitting_instance(fam), solver).size();
  ++r.bound.checked;
  if (!within_theorem_bound(t, n, m)) {
    ++r.bound.violations;
    r.notes.push_back("bound exceeded: tau=" + std::to_string(t) + " n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
  }
}

}  // namespace

std::vector<MultigraphPattern> prop1_patterns(int max_m) {
  std::vector<MultigraphPattern> out;
  for (const char* name : {"K2", "C1", "P3", "K1_3", "C2"}) {
    auto p = find_pattern(name);
    if (p && p->size() <= max_m) out.push_back(*p);
  }
  return out;
}

SuiteReport run_folklore(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "folklore";
  for (int n = 1; n <= opt.n; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const SubdivisionFamily fam = longest_paths(g, opt.enumeration);
      ++r.cases;
      if (!fam.exhaustive) {
        ++r.skipped;
        continue;
      }
      if (const auto pi = is_pairwise_intersecting(fam); !pi) {
        const auto [i, j] = *pi.witness;
        note_violation(r, g, "disjoint longest paths " + fam.vertex_sets[i].to_string() + " " +
                                 fam.vertex_sets[j].to_string());
        continue;
      }
      tally_bound(r, fam, n, opt.solver);
    }
  }
  return r;
}

SuiteReport run_prop1(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "prop1";
  const auto patterns = prop1_patterns(opt.m);
  int disjoint = 0;
  std::size_t pairs = 0;
  for (int n = 1; n <= opt.n; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      for (const auto& m : patterns) {
        EnumerationOptions eo = opt.enumeration;
        eo.allow_partial = false;
        const SubdivisionFamily fam = enumerate_maximum(g, m, eo);
        ++r.cases;
        const Prop1Report rep = verify_prop1(g, fam);
        if (!rep.pairwise_intersecting) {
          ++disjoint;
          pairs += rep.pairs_checked;
          if (rep.pairs_truncated) r.notes.push_back("pair limit reached on " + m.name());
        }
        if (!rep.holds) {
          note_violation(r, g, m.name() + ": " + rep.summary);
          continue;
        }
        tally_bound(r, fam, n, opt.solver);
      }
    }
  }
  r.notes.push_back("not_pairwise=" + std::to_string(disjoint) + " disjoint_pairs_checked=" + std::to_string(pairs));
  return r;
}

SuiteReport run_lemmas(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "lemmas";
  const int cases = opt.cases > 0 ? opt.cases : 500;

  for (int i = 0; i < cases; ++i) {
    const PlantedShortcut ps = planted_shortcut(opt.seed + static_cast<std::uint64_t>(i));
    const Cycle c(ps.graph, ps.cycle);
    const Path p(ps.graph, ps.path);
    ++r.cases;
    const auto out = shorten_cycle(ps.graph, c, p);
    if (!succeeded(out)) {
      note_violation(r, ps.graph, "shorten_cycle refused: " + std::get<HypothesisFailure>(out).reason());
      continue;
    }
    const CycleResult& res = std::get<CycleResult>(out);
    const int l = c.length();
    const int l2 = static_cast<int>(res.cycle.size());
    bool ok = 2 * l2 > l && l2 < l;
    try {
      Cycle(ps.graph, res.cycle);
    } catch (const std::invalid_argument&) {
      ok = false;
    }
    if (ok && !recheck(res.cert, ps.graph)) ok = false;
    if (!ok)
      note_violation(r, ps.graph, "shorten_cycle |C|=" + std::to_string(l) + " |C'|=" + std::to_string(l2));
  }

  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  for (int i = 0; i < cases; ++i) {
    const int l = 4 + static_cast<int>(rng() % 37);
    const Graph g = cycle_graph(l);
    std::vector<Vertex> seq(l);
    std::iota(seq.begin(), seq.end(), 0);
    std::rotate(seq.begin(), seq.begin() + static_cast<long>(rng() % l), seq.end());
    if (rng() & 1) std::reverse(seq.begin(), seq.end());
    const Cycle c(g, seq);

    std::vector<int> pos(l);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(4);
    std::sort(pos.begin(), pos.end());
    const int shift = static_cast<int>(rng() % 4);
    std::array<Vertex, 4> cuts{};
    for (int k = 0; k < 4; ++k) cuts[k] = seq[pos[(k + shift) % 4]];

    ++r.cases;
    const RerouteChoice rc = reroute_choice(c, cuts);
    const int len = rc.lengths[rc.index - 1];
    bool ok = 2 * len < l;
    if (rc.index == 3 && 2 * rc.lengths[0] < l) ok = false;  // P1 should have been taken
    if (ok && !recheck(rc.cert, g)) ok = false;
    if (!ok)
      note_violation(r, g, "reroute_choice l=" + std::to_string(l) + " index=" + std::to_string(rc.index));
  }
  return r;
}

SuiteReport run_bounds(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "bounds";
  const int cases = opt.cases > 0 ? opt.cases : 100;
  const int max_n = std::clamp(opt.n, 4, 14);
  const auto k2 = *find_pattern("K2");
  const auto c1 = *find_pattern("C1");
  std::mt19937_64 rng(opt.seed);

  int done = 0, fallbacks = 0;
  std::map<std::string, int> modes;
  for (int attempt = 0; done < cases && attempt < 20 * cases; ++attempt) {
    const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 3));
    const std::uint64_t num = 1 + rng() % 5;
    const Graph g = random_connected(n, num, 10, rng());
    const MultigraphPattern& m = (attempt / 3 % 3 == 2) ? c1 : k2;
    // small explicit thresholds push the builder past the small-tau exit
    const Threshold theta = attempt % 3 == 0   ? Threshold::cube_root(n)
                            : attempt % 3 == 1 ? Threshold::ratio(1, 2)
                                               : Threshold::ratio(1, 4);

    BuildOptions bo;
    bo.enumeration = opt.enumeration;
    bo.solver = opt.solver;
    BuildResult res;
    try {
      res = build_transversal(g, m, theta, bo);
    } catch (const NotPairwiseIntersecting&) {
      ++r.skipped;
      continue;
    }
    ++done;
    ++r.cases;

    const SubdivisionFamily fam = enumerate_maximum(g, m, opt.enumeration);
    std::string why;
    if (!res.valid) why = "build_transversal reported invalid";
    else if (!is_transversal(res.transversal, fam)) why = "returned set misses a member";
    for (const auto& cert : res.trace) {
      if (!why.empty()) break;
      if (cert.step == "enumerate") continue;
      if (const auto rc = recheck(cert, g); !rc) why = "step " + cert.step + " does not recheck: " + rc.problem;
    }
    if (!why.empty()) {
      note_violation(r, g, m.name() + ": " + why);
      continue;
    }
    if (res.fallback) ++fallbacks;
    std::string mode = res.trace.back().output.substr(0, res.trace.back().output.find(','));
    if (mode.rfind("mode=", 0) == 0) mode.erase(0, 5);
    ++modes[mode];
    if (res.bound_applies) {
      ++r.bound.checked;
      if (!res.within_bound) {
        ++r.bound.violations;
        r.notes.push_back("bound exceeded by |S|=" + std::to_string(res.transversal.count()));
      }
    }
  }
  std::string summary = "fallbacks=" + std::to_string(fallbacks);
  for (const auto& [k, v] : modes) summary += " " + k + ":" + std::to_string(v);
  r.notes.push_back(summary);
  if (done < cases) r.notes.push_back("only " + std::to_string(done) + " pairwise-intersecting instances found");
  return r;
}

std::optional<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "folklore") return run_folklore(opt);
  if (name == "prop1") return run_prop1(opt);
  if (name == "lemmas") return run_lemmas(opt);
  if (name == "bounds") return run_bounds(opt);
  return std::nullopt;
}

}  // namespace gallai::cli
