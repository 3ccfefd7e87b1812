#include "gallai/text_format.hpp"

#include <charconv>
#include <set>
#include <utility>
#include <vector>

namespace gallai {

ParseError::ParseError(Kind kind, int line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

const char* to_string(ParseError::Kind kind) noexcept {
  switch (kind) {
    case ParseError::Kind::missing_header: return "missing header";
    case ParseError::Kind::malformed_line: return "malformed line";
    case ParseError::Kind::vertex_out_of_range: return "vertex out of range";
    case ParseError::Kind::loop: return "loop";
    case ParseError::Kind::duplicate_edge: return "duplicate edge";
    case ParseError::Kind::edge_count_mismatch: return "edge count mismatch";
    case ParseError::Kind::invalid_pattern: return "invalid pattern";
  }
  return "unknown";
}

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

// Exactly two decimal integers separated by a single space. Signs are accepted
// here so that negative ids are reported as out of range, not malformed.
bool parse_pair(std::string_view s, long long& a, long long& b) {
  const auto space = s.find(' ');
  if (space == std::string_view::npos || space == 0 || space + 1 >= s.size()) return false;
  auto number = [](std::string_view t, long long& out) {
    const std::string_view digits = t.starts_with('-') ? t.substr(1) : t;
    if (digits.empty()) return false;
    for (char c : digits)
      if (c < '0' || c > '9') return false;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    return ec == std::errc{} && ptr == t.data() + t.size();
  };
  return number(s.substr(0, space), a) && number(s.substr(space + 1), b);
}

struct RawEdges {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
};

RawEdges parse_edges(const std::vector<Line>& lines, std::size_t first, bool simple) {
  if (first >= lines.size()) throw ParseError(ParseError::Kind::missing_header, 0, "expected `n m` header");
  long long n = 0, m = 0;
  const Line& header = lines[first];
  if (!parse_pair(header.text, n, m) || n < 0 || m < 0 || n > 1'000'000)
    throw ParseError(ParseError::Kind::missing_header, header.number, "expected `n m`, got `" + std::string(header.text) + "`");
  const std::size_t available = lines.size() - first - 1;
  if (available != static_cast<std::size_t>(m))
    throw ParseError(ParseError::Kind::edge_count_mismatch, header.number,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(available));
  RawEdges raw;
  raw.order = static_cast<int>(n);
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    long long u = 0, v = 0;
    if (!parse_pair(line.text, u, v))
      throw ParseError(ParseError::Kind::malformed_line, line.number, "expected `u v`, got `" + std::string(line.text) + "`");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseError::Kind::vertex_out_of_range, line.number,
                       "edge " + std::to_string(u) + " " + std::to_string(v) + " with n=" + std::to_string(n));
    if (simple) {
      if (u == v) throw ParseError(ParseError::Kind::loop, line.number, "loop at " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second)
        throw ParseError(ParseError::Kind::duplicate_edge, line.number,
                         "edge " + std::to_string(u) + " " + std::to_string(v) + " repeated");
    }
    raw.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return raw;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (!lines.empty() && lines.front().text == "pattern")
    throw ParseError(ParseError::Kind::malformed_line, lines.front().number, "pattern file given where a graph was expected");
  const RawEdges raw = parse_edges(lines, 0, true);
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  for (auto [u, v] : raw.edges) edges.push_back({u, v});
  return Graph(raw.order, edges);
}

MultigraphPattern parse_pattern(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines.front().text != "pattern")
    throw ParseError(ParseError::Kind::missing_header, lines.empty() ? 0 : lines.front().number,
                     "pattern files start with the line `pattern`");
  const RawEdges raw = parse_edges(lines, 1, false);
  std::vector<PatternEdge> edges;
  for (auto [u, v] : raw.edges) edges.push_back({u, v});
  try {
    return MultigraphPattern(raw.order, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::invalid_pattern, lines[1].number, e.what());
  }
}

std::string serialize(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string serialize(const MultigraphPattern& m) {
  std::string out = "pattern\n" + std::to_string(m.order()) + " " + std::to_string(m.size()) + "\n";
  for (const auto& e : m.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace gallai
