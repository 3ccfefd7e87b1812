#include <algorithm>
#include <set>

#include "checks.hpp"

namespace gallai {

namespace detail {

bool apply_op(int sign, std::string_view op) {
  if (op == "<") return sign < 0;
  if (op == "<=") return sign <= 0;
  if (op == ">") return sign > 0;
  if (op == ">=") return sign >= 0;
  if (op == "=") return sign == 0;
  throw std::invalid_argument("unknown comparison `" + std::string(op) + "`");
}

Check compare(std::string label, std::int64_t a, std::string_view op, std::int64_t b, bool required) {
  const int sign = a < b ? -1 : (a > b ? 1 : 0);
  return {std::move(label), std::to_string(a), std::string(op), std::to_string(b), apply_op(sign, op), required};
}

std::string theta_term(std::int64_t coef, int k, const Threshold& theta) {
  std::string t = std::to_string(coef) + "*" + theta.to_string();
  if (k != 1) t += "^" + std::to_string(k);
  return t;
}

Check compare_theta(std::string label, std::int64_t lhs, std::string_view op, std::int64_t coef, int k,
                    const Threshold& theta, bool required) {
  const int sign = -theta.compare_scaled(coef, k, lhs);
  return {std::move(label), std::to_string(lhs), std::string(op), theta_term(coef, k, theta), apply_op(sign, op),
          required};
}

int ring_distance(const std::vector<Vertex>& cycle, Vertex x, Vertex y) {
  const auto ix = std::find(cycle.begin(), cycle.end(), x) - cycle.begin();
  const auto iy = std::find(cycle.begin(), cycle.end(), y) - cycle.begin();
  const int l = static_cast<int>(cycle.size());
  if (ix == l || iy == l) return -1;
  const int d = static_cast<int>(std::abs(ix - iy));
  return std::min(d, l - d);
}

std::string seq_summary(const std::vector<Vertex>& seq) { return format_vertices(seq); }

}  // namespace detail

namespace {

using detail::compare;
using detail::compare_theta;

const std::vector<Vertex>* find(const Certificate& c, const std::string& name) {
  auto it = c.objects.find(name);
  return it == c.objects.end() ? nullptr : &it->second;
}

std::int64_t param(const Certificate& c, const std::string& key) {
  auto it = c.params.find(key);
  if (it == c.params.end()) throw std::invalid_argument("certificate lacks parameter `" + key + "`");
  return std::stoll(it->second);
}

bool has_param(const Certificate& c, const std::string& key) { return c.params.count(key) > 0; }

Threshold theta_of(const Certificate& c) {
  auto it = c.params.find("theta");
  if (it == c.params.end()) throw std::invalid_argument("certificate lacks parameter `theta`");
  return Threshold::parse(it->second);
}

int size(const std::vector<Vertex>* v) { return static_cast<int>(v->size()); }
int edges(const std::vector<Vertex>* v) { return static_cast<int>(v->size()) - 1; }

int common(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::set<Vertex> sa(a.begin(), a.end());
  int k = 0;
  for (Vertex v : std::set<Vertex>(b.begin(), b.end())) k += sa.count(v) ? 1 : 0;
  return k;
}

void reroute_checks(const Certificate& c, std::vector<Check>& out) {
  const auto* cyc = find(c, "cycle:C");
  const auto* cuts = find(c, "seq:cuts");
  if (!cyc || !cuts || cuts->size() != 4) return;
  const int l = size(cyc);
  std::array<int, 4> pos{};
  for (int i = 0; i < 4; ++i)
    pos[i] = static_cast<int>(std::find(cyc->begin(), cyc->end(), (*cuts)[i]) - cyc->begin());
  int total = 0;
  std::array<int, 4> len{};
  for (int i = 0; i < 4; ++i) {
    len[i] = ((pos[(i + 1) % 4] - pos[i]) % l + l) % l;
    total += len[i];
    out.push_back(compare("arc" + std::to_string(i + 1), len[i], ">=", 1));
  }
  out.push_back(compare("cyclic_order", total, "=", l));
  if (has_param(c, "index")) {
    const int i = static_cast<int>(param(c, "index"));
    out.push_back(compare("choice", len[i - 1], "<", l - len[i - 1]));
  }
}

void shorten_checks(const Certificate& c, std::vector<Check>& out) {
  const auto* cyc = find(c, "cycle:C");
  const auto* p = find(c, "path:P");
  if (cyc && p) out.push_back(compare("pre", edges(p), "<", detail::ring_distance(*cyc, p->front(), p->back())));
  const auto* seg = find(c, "path:segment");
  if (cyc && seg) out.push_back(compare("segment", edges(seg), "<", detail::ring_distance(*cyc, seg->front(), seg->back())));
  const auto* out_cycle = find(c, "cycle:C'");
  if (cyc && out_cycle) {
    out.push_back(compare("shorter", size(out_cycle), "<", size(cyc)));
    out.push_back(compare("longer_than_half", size(cyc), "<", 2 * size(out_cycle)));
  }
}

int connector_count(const Certificate& c) {
  int k = 0;
  for (const auto& [name, seq] : c.objects)
    if (name.rfind("path:K", 0) == 0) ++k;
  return k;
}

void extend_checks(const Certificate& c, std::vector<Check>& out) {
  const auto* a = find(c, "set:A");
  const auto* b = find(c, "set:B");
  const auto* y = find(c, "set:Y'");
  if (!a || !b || !y || !has_param(c, "theta")) return;
  const Threshold theta = theta_of(c);
  const int s = std::min(size(a), size(b));
  if (const auto* x = find(c, "set:X'")) {
    out.push_back(compare_theta("small_separator", s, ">", size(y), 1, theta));
    out.push_back(compare_theta("pretransversal", size(x), ">=", size(y), 1, theta));
    out.push_back(compare("covers_side", size(x), ">=", s));
  } else {
    out.push_back(compare_theta("no_small_separator", s, "<=", size(y), 1, theta));
    out.push_back(compare("menger", connector_count(c), "=", size(y)));
  }
}

void base_cycle_checks(const Certificate& c, std::vector<Check>& out) {
  if (!has_param(c, "m") || !has_param(c, "tau") || !has_param(c, "theta")) return;
  const Threshold theta = theta_of(c);
  const auto m = param(c, "m");
  const auto tau = param(c, "tau");
  out.push_back(compare_theta("hypothesis", tau, ">", m * m, 1, theta));
  const auto* s = find(c, "set:S");
  const auto* qe = find(c, "path:Qe");
  if (s) out.push_back(compare("minimal_transversal", size(s), ">=", tau));
  if (s && qe) {
    const int share = common(*s, *qe);
    out.push_back(compare_theta("edge_share", share, ">", m, 1, theta));
    if (const auto* p = find(c, "path:P")) {
      out.push_back(compare("P_vertices", size(p), ">=", share, false));
      out.push_back(compare("P_edges", edges(p), ">=", share, false));
    }
  }
  const auto* c0 = find(c, "cycle:C0");
  const auto* p = find(c, "path:P");
  const auto* r = find(c, "path:R");
  if (c0) out.push_back(compare_theta("cycle_length", size(c0), ">", m, 1, theta));
  if (c0 && p && r) out.push_back(compare("composition", size(c0), "=", size(p) + size(r) - 2));
}

void enlarge_checks(const Certificate& c, std::vector<Check>& out) {
  if (has_param(c, "m") && has_param(c, "t")) {
    out.push_back(compare("pigeonhole", param(c, "t"), ">", param(c, "m"), false));
    out.push_back(compare("two_paths", param(c, "t"), ">=", 2));
  }
  const auto* cyc = find(c, "cycle:C");
  const auto* next = find(c, "cycle:C'");
  if (cyc && next) out.push_back(compare("longer", size(next), ">", size(cyc)));
}

void inner_checks(const Certificate& c, std::vector<Check>& out) {
  if (!has_param(c, "t") || !has_param(c, "m") || !has_param(c, "covered") || !has_param(c, "inner")) return;
  const auto t = param(c, "t"), m = param(c, "m"), covered = param(c, "covered"), inner = param(c, "inner");
  out.push_back(compare("inner_total", inner, "=", t - covered));
  out.push_back(compare("inner_lower", inner, ">=", t - m));
}

void shrink_checks(const Certificate& c, std::vector<Check>& out) {
  const auto* cyc = find(c, "cycle:C");
  if (cyc && has_param(c, "theta"))
    out.push_back(compare_theta("length_hypothesis", size(cyc), ">", 4, 2, theta_of(c), false));
  const auto* t = find(c, "path:T");
  if (cyc && t) out.push_back(compare("short_path", edges(t), "<", detail::ring_distance(*cyc, t->front(), t->back())));
  const auto* next = find(c, "cycle:C'");
  if (cyc && next) {
    out.push_back(compare("shorter", size(next), "<", size(cyc)));
    out.push_back(compare("longer_than_half", size(cyc), "<", 2 * size(next)));
  }
}

void claim3ii_checks(const Certificate& c, std::vector<Check>& out) {
  const auto* cyc = find(c, "cycle:C");
  if (cyc && has_param(c, "theta"))
    out.push_back(compare_theta("non_transversal_cap", size(cyc), "<=", 2, 2, theta_of(c), false));
}

void assemble_checks(const Certificate& c, std::vector<Check>& out) {
  const auto* s = find(c, "set:S");
  if (s && has_param(c, "n") && has_param(c, "m")) {
    const int n = static_cast<int>(param(c, "n"));
    const int m = static_cast<int>(param(c, "m"));
    out.push_back({"theorem_bound", std::to_string(size(s)), "<=",
                   "max(5*" + std::to_string(n) + "^(2/3),2*" + std::to_string(m) + "^2*" + std::to_string(n) + "^(1/3))",
                   within_theorem_bound(size(s), n, m), false});
  }
  if (has_param(c, "tau_H") && has_param(c, "m") && has_param(c, "theta")) {
    const Threshold theta = theta_of(c);
    const auto m = param(c, "m");
    const auto tau_h = param(c, "tau_H");
    const bool small = theta.compare_scaled(m * m, 1, tau_h) >= 0 || theta.compare_scaled(4, 2, tau_h) >= 0;
    out.push_back({"small_tau", std::to_string(tau_h), "<=",
                   "max(" + detail::theta_term(m * m, 1, theta) + "," + detail::theta_term(4, 2, theta) + ")", small,
                   has_param(c, "mode_small") && param(c, "mode_small") != 0});
  }
}

bool valid_path(const Graph& g, const std::vector<Vertex>& seq, const VertexSet& removed, std::string& why) {
  if (seq.empty()) {
    why = "empty";
    return false;
  }
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.valid(seq[i])) {
      why = "vertex out of range";
      return false;
    }
    if (removed.contains(seq[i])) {
      why = "uses a removed vertex";
      return false;
    }
    if (!seen.insert(seq[i]).second) {
      why = "repeated vertex";
      return false;
    }
    if (i > 0 && !g.adjacent(seq[i - 1], seq[i])) {
      why = "non-adjacent consecutive vertices";
      return false;
    }
  }
  return true;
}

bool connector_ok(const Graph& g, const Certificate& c, const VertexSet& removed, std::string& why) {
  const auto* a = find(c, "set:A");
  const auto* b = find(c, "set:B");
  if (!a || !b) return true;
  const VertexSet as(g.order(), *a), bs(g.order(), *b);
  if (const auto* y = find(c, "set:Y'")) {
    const VertexSet ys(g.order(), *y);
    if (reachable(g, as - ys - removed, ys | removed).intersects(bs)) {
      why = "Y' does not separate A from B";
      return false;
    }
  }
  VertexSet used(g.order());
  for (const auto& [name, seq] : c.objects) {
    if (name.rfind("path:K", 0) != 0) continue;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (used.contains(seq[i])) {
        why = "connector paths overlap";
        return false;
      }
      used.insert(seq[i]);
      if (as.contains(seq[i]) != (i == 0) || bs.contains(seq[i]) != (i + 1 == seq.size())) {
        if (!(seq.size() == 1 && as.contains(seq[0]) && bs.contains(seq[0]))) {
          why = name + " is not an A,B-path";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Check> derive_checks(const Certificate& c) {
  std::vector<Check> out;
  if (c.step == "reroute_choice") reroute_checks(c, out);
  else if (c.step == "shorten_cycle") shorten_checks(c, out);
  else if (c.step == "extend_pretransversal") extend_checks(c, out);
  else if (c.step == "base_cycle") base_cycle_checks(c, out);
  else if (c.step == "enlarge_cycle") enlarge_checks(c, out);
  else if (c.step == "inner_path_stats") inner_checks(c, out);
  else if (c.step == "shrink_cycle") shrink_checks(c, out);
  else if (c.step == "claim3ii") claim3ii_checks(c, out);
  else if (c.step == "assemble") assemble_checks(c, out);
  return out;
}

RecheckResult recheck(const Certificate& c, const Graph& g) {
  VertexSet removed(g.order());
  if (const auto* r = find(c, "set:removed")) {
    for (Vertex v : *r) {
      if (!g.valid(v)) return {false, "set:removed out of range"};
      removed.insert(v);
    }
  }
  for (const auto& [name, seq] : c.objects) {
    std::string why;
    if (name.rfind("cycle:", 0) == 0) {
      if (seq.size() < 3) return {false, name + ": fewer than three vertices"};
      if (!valid_path(g, seq, removed, why)) return {false, name + ": " + why};
      if (!g.adjacent(seq.back(), seq.front())) return {false, name + ": not closed"};
    } else if (name.rfind("path:", 0) == 0) {
      if (!valid_path(g, seq, removed, why)) return {false, name + ": " + why};
    } else {
      for (Vertex v : seq)
        if (!g.valid(v)) return {false, name + ": vertex out of range"};
    }
  }
  if (c.step == "extend_pretransversal") {
    std::string why;
    if (!connector_ok(g, c, removed, why)) return {false, why};
  }
  const auto derived = derive_checks(c);
  if (derived != c.checks) return {false, "recorded checks differ from the recomputed ones"};
  if (c.ok())
    for (const auto& check : derived)
      if (check.required && !check.holds) return {false, "check " + check.label + " fails"};
  return {};
}

std::string trace_line(const Certificate& c) {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), ' ', '_');
    return s.empty() ? std::string("-") : s;
  };
  std::string line = "step=" + c.step + " hypothesis=" + (c.ok() ? std::string("ok") : "fail:" + clean(c.failure)) +
                     " output=" + clean(c.output) + " check=";
  if (c.checks.empty()) return line + "-";
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    const auto& k = c.checks[i];
    if (i) line += ';';
    line += clean(k.label + ":" + k.lhs + k.op + k.rhs);
  }
  return line;
}

Certificate lift_certificate(const Certificate& cert, const InducedSubgraph& sub, const VertexSet& removed) {
  Certificate out = cert;
  VertexSet all_removed = removed;
  for (auto& [name, seq] : out.objects) {
    if (name == "set:removed") continue;
    for (Vertex& v : seq) v = sub.to_parent[v];
  }
  if (auto it = out.objects.find("set:removed"); it != out.objects.end()) {
    for (Vertex v : it->second) all_removed.insert(sub.to_parent[v]);
  }
  if (!all_removed.empty()) out.objects["set:removed"] = all_removed.to_vector();
  return out;
}

}  // namespace gallai
