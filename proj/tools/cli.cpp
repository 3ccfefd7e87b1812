#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gallai/constructions.hpp"
#include "gallai/procedures.hpp"
#include "gallai/text_format.hpp"
#include "gallai/transversal.hpp"
#include "verify.hpp"

namespace gallai::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string("fnv1a:") + buf;
}

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Disconnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t budget = 100'000'000;
  int jobs = 1;
  bool json = false;
  std::uint64_t seed = 42;

  EnumerationOptions enumeration() const {
    EnumerationOptions eo;
    eo.node_budget = budget;
    eo.jobs = jobs;
    return sets_only(eo);
  }
  SolverOptions solver() const { return SolverOptions{budget}; }
};

// Collects output records; text mode prints key=value lines, json mode one object per line.
class Reporter {
 public:
  Reporter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void record(const json& rec) {
    if (json_) {
      out_ << rec.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [k, v] : rec.items()) {
      if (!first) out_ << ' ';
      first = false;
      out_ << k << '=' << text(v);
    }
    out_ << '\n';
  }

  void trace(const Certificate& cert) {
    if (!json_) {
      out_ << trace_line(cert) << '\n';
      return;
    }
    json rec;
    rec["step"] = cert.step;
    rec["hypothesis"] = cert.ok() ? "ok" : "fail:" + cert.failure;
    rec["output"] = cert.output;
    json checks = json::array();
    for (const auto& c : cert.checks)
      checks.push_back({{"label", c.label}, {"lhs", c.lhs}, {"op", c.op}, {"rhs", c.rhs},
                        {"holds", c.holds}, {"required", c.required}});
    rec["check"] = checks;
    out_ << rec.dump() << '\n';
  }

  void raw(const std::string& block) {
    if (json_) {
      record({{"text", block}});
      return;
    }
    out_ << block;
    if (!block.empty() && block.back() != '\n') out_ << '\n';
  }

 private:
  static std::string text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += text(v[i]);
      }
      return s + "]";
    }
    return v.dump();
  }

  std::ostream& out_;
  bool json_;
};

json to_json(const VertexSet& s) { return s.to_vector(); }

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// file path, "-" for stdin, or a catalog graph name
struct Input {
  Graph graph;
  std::string label;
  std::string digest;
};

Input load_graph(const std::string& where, std::istream& in) {
  Input r;
  if (where.empty() || where == "-") {
    r.label = "stdin";
    r.graph = parse_graph(slurp(in));
  } else if (std::filesystem::is_regular_file(where)) {
    std::ifstream f(where, std::ios::binary);
    if (!f) throw UsageError("cannot open " + where);
    r.label = where;
    r.graph = parse_graph(slurp(f));
  } else if (auto g = find_graph(where)) {
    r.label = "catalog:" + where;
    r.graph = *g;
  } else {
    throw UsageError("no such file or catalog graph: " + where);
  }
  r.digest = digest(serialize(r.graph));
  return r;
}

MultigraphPattern load_pattern(const std::string& what) {
  if (auto p = find_pattern(what)) return *p;
  if (std::filesystem::is_regular_file(what)) {
    std::ifstream f(what, std::ios::binary);
    return parse_pattern(slurp(f));
  }
  throw UsageError("unknown pattern: " + what);
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Disconnected("input graph is disconnected");
}

std::string status_name(FamilyStatus s) {
  switch (s) {
    case FamilyStatus::nonempty: return "nonempty";
    case FamilyStatus::no_subdivision: return "no_subdivision";
    case FamilyStatus::acyclic: return "acyclic";
  }
  return "?";
}

struct Context {
  Globals g;
  std::istream& in;
  std::ostream& err;
  Reporter& rep;
  json inputs = json::object();
};

int cmd_tau(Context& ctx, const std::string& file, const std::string& pattern_name) {
  const Input input = load_graph(file, ctx.in);
  ctx.inputs["graph"] = input.digest;
  const MultigraphPattern m = load_pattern(pattern_name);
  ctx.inputs["pattern"] = digest(serialize(m));
  require_connected(input.graph);

  const TauResult t = tau(input.graph, m, ctx.g.enumeration(), ctx.g.solver());
  const bool verified = is_transversal(t.witness, t.family) &&
                        (t.family.empty() || t.certificate != LowerBoundKind::empty_family);
  json rec;
  rec[m.is_k2() ? "gal" : "tau"] = t.tau;
  rec["witness"] = to_json(t.witness);
  rec["family"] = t.family.vertex_sets.size();
  rec["mu"] = t.family.mu;
  if (t.family.empty()) rec["status"] = status_name(t.family.status);
  ctx.rep.record(rec);
  ctx.rep.record({{"lower_bound_certificate", to_string(t.certificate)}, {"verified", verified}});
  return verified ? exit_ok : exit_violation;
}

int cmd_family(Context& ctx, const std::string& file, const std::string& pattern_name) {
  const Input input = load_graph(file, ctx.in);
  ctx.inputs["graph"] = input.digest;
  const MultigraphPattern m = load_pattern(pattern_name);
  ctx.inputs["pattern"] = digest(serialize(m));
  require_connected(input.graph);
  const SubdivisionFamily fam = enumerate_maximum(input.graph, m, ctx.g.enumeration());
  json rec;
  rec["m"] = fam.edge_size;
  rec["mu"] = fam.mu;
  rec["count"] = fam.vertex_sets.size();
  rec["exhaustive"] = fam.exhaustive;
  rec["status"] = status_name(fam.status);
  ctx.rep.record(rec);
  for (const auto& vs : fam.vertex_sets) ctx.rep.record({{"set", to_json(vs)}});
  return exit_ok;
}

int cmd_build(Context& ctx, const std::string& file, const std::string& pattern_name, const std::string& theta_text) {
  const Input input = load_graph(file, ctx.in);
  ctx.inputs["graph"] = input.digest;
  const MultigraphPattern m = load_pattern(pattern_name);
  ctx.inputs["pattern"] = digest(serialize(m));
  require_connected(input.graph);

  Threshold theta = Threshold::cube_root(input.graph.order());
  if (theta_text != "auto") {
    try {
      theta = Threshold::parse(theta_text);
    } catch (const std::exception& e) {
      throw UsageError("bad --theta " + theta_text + ": " + e.what());
    }
  }
  BuildOptions bo;
  bo.enumeration = ctx.g.enumeration();
  bo.solver = ctx.g.solver();
  BuildResult res;
  try {
    res = build_transversal(input.graph, m, theta, bo);
  } catch (const NotPairwiseIntersecting& e) {
    const auto [a, b] = e.witness();
    ctx.rep.record({{"not_pairwise_intersecting", true}, {"a", to_json(a)}, {"b", to_json(b)}});
    return exit_not_intersecting;
  }

  bool rechecked = true;
  for (const auto& cert : res.trace) {
    ctx.rep.trace(cert);
    if (cert.step == "enumerate") continue;
    if (const auto rc = recheck(cert, input.graph); !rc) {
      rechecked = false;
      ctx.err << "recheck failed at " << cert.step << ": " << rc.problem << '\n';
    }
  }
  json rec;
  rec["transversal"] = to_json(res.transversal);
  rec["size"] = res.transversal.count();
  rec["y"] = to_json(res.y);
  rec["theta"] = theta.to_string();
  rec["fallback"] = res.fallback;
  rec["valid"] = res.valid;
  rec["recheck"] = rechecked ? "ok" : "failed";
  rec["bound_applies"] = res.bound_applies;
  rec["within_bound"] = res.within_bound;
  ctx.rep.record(rec);
  const bool ok = res.valid && rechecked && (!res.bound_applies || res.within_bound);
  return ok ? exit_ok : exit_violation;
}

int cmd_verify(Context& ctx, const std::string& suite, int n, int m, int cases) {
  SuiteOptions opt;
  opt.n = n;
  opt.m = m;
  opt.cases = cases;
  opt.seed = ctx.g.seed;
  opt.enumeration = ctx.g.enumeration();
  opt.solver = ctx.g.solver();
  const auto r = run_suite(suite, opt);
  if (!r) throw UsageError("unknown suite: " + suite);
  json rec;
  rec["suite"] = r->suite;
  rec["cases"] = r->cases;
  rec["skipped"] = r->skipped;
  rec["violations"] = r->violations;
  rec["bound_checked"] = r->bound.checked;
  rec["bound_violations"] = r->bound.violations;
  rec["result"] = r->passed() ? "pass" : "fail";
  ctx.rep.record(rec);
  for (const auto& note : r->notes) ctx.rep.record({{"note", note}});
  if (r->reproducer) {
    ctx.rep.record({{"detail", r->detail}});
    ctx.rep.raw("# reproducer\n" + *r->reproducer);
  }
  return r->passed() ? exit_ok : exit_violation;
}

int cmd_catalog(Context& ctx, const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const auto& e : graph_catalog())
      ctx.rep.record({{"graph", e.name}, {"n", e.graph.order()}, {"m", e.graph.size()}, {"note", e.note}});
    for (const auto& p : pattern_catalog())
      ctx.rep.record({{"pattern", p.name()}, {"w", p.order()}, {"m", p.size()}});
    return exit_ok;
  }
  if (name.empty()) throw UsageError("catalog emit needs a name");
  if (auto g = find_graph(name)) {
    ctx.rep.raw(serialize(*g));
    return exit_ok;
  }
  if (auto p = find_pattern(name)) {
    ctx.rep.raw(serialize(*p));
    return exit_ok;
  }
  throw UsageError("unknown catalog entry: " + name);
}

std::string echo(const std::vector<std::string>& args) {
  std::string s = "gallai";
  for (const auto& a : args) s += ' ' + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Globals g;

  CLI::App app{"Maximum subdivisions, their transversals and Gallai numbers"};
  app.name("gallai");
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--budget", g.budget, "search node budget")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads inside searches")->check(CLI::Range(1, 256));
  app.add_flag("--json", g.json, "line-delimited JSON output");
  app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();

  std::string file, pattern = "K2";
  app.add_option("file", file, "graph file, - for stdin, or a catalog name");
  app.add_option("--pattern", pattern, "pattern name or pattern file")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  int n = 7, m = 3, cases = 0;
  verify->add_option("suite", suite, "folklore | prop1 | lemmas | bounds")->required();
  verify->add_option("--n", n, "order cap")->capture_default_str();
  verify->add_option("--m", m, "pattern size cap")->capture_default_str();
  verify->add_option("--cases", cases, "randomized cases (0 = suite default)");

  auto* build = app.add_subcommand("build-transversal", "constructive transversal with step trace");
  std::string bfile, bpattern = "K2", theta = "auto";
  build->add_option("file", bfile, "graph file, - for stdin, or a catalog name");
  build->add_option("--pattern", bpattern, "pattern name or pattern file")->capture_default_str();
  build->add_option("--theta", theta, "auto or p/q")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "list or emit built-in graphs and patterns");
  std::string action, name;
  catalog->add_option("action", action, "list | emit")->required()->check(CLI::IsMember({"list", "emit"}));
  catalog->add_option("name", name, "entry to emit");

  auto* family = app.add_subcommand("family", "vertex sets of all maximum subdivisions");
  std::string ffile, fpattern = "K2";
  family->add_option("file", ffile, "graph file, - for stdin, or a catalog name");
  family->add_option("--pattern", fpattern, "pattern name or pattern file")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Reporter rep(out, g.json);
  Context ctx{g, in, err, rep};
  int code = exit_ok;
  try {
    if (*verify) code = cmd_verify(ctx, suite, n, m, cases);
    else if (*build) code = cmd_build(ctx, bfile, bpattern, theta);
    else if (*catalog) code = cmd_catalog(ctx, action, name);
    else if (*family) code = cmd_family(ctx, ffile, fpattern);
    else code = cmd_tau(ctx, file, pattern);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    code = exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    code = exit_usage;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    code = exit_budget;
  } catch (const NonExhaustiveFamily& e) {
    err << "budget: " << e.what() << '\n';
    code = exit_budget;
  } catch (const Disconnected& e) {
    err << "error: " << e.what() << '\n';
    code = exit_disconnected;
  } catch (const NotPairwiseIntersecting& e) {
    err << "error: " << e.what() << '\n';
    code = exit_not_intersecting;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    code = exit_violation;
  }

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (g.json) {
    json footer;
    footer["command"] = echo(args);
    footer["inputs"] = ctx.inputs;
    footer["wall_ms"] = ms.count();
    footer["exit"] = code;
    out << footer.dump() << '\n';
  } else {
    out << "# command=\"" << echo(args) << "\"";
    for (const auto& [k, v] : ctx.inputs.items()) out << ' ' << k << '=' << v.get<std::string>();
    out << " wall_ms=" << ms.count() << " exit=" << code << '\n';
  }
  return code;
}

}  // namespace gallai::cli
