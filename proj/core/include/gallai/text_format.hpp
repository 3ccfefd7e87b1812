#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gallai/graph.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

/// Edge-list text format.
///
///   # comment lines are ignored
///   n m
///   u v        (m lines, 0 <= u,v < n)
///
/// A pattern file starts with the line `pattern`; loops and repeated pairs are
/// then allowed. Lines end in LF.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    missing_header,
    malformed_line,
    vertex_out_of_range,
    loop,
    duplicate_edge,
    edge_count_mismatch,
    invalid_pattern,
  };

  ParseError(Kind kind, int line, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  /// 1-based line number of the offending line (0 when not line-specific).
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

const char* to_string(ParseError::Kind kind) noexcept;

Graph parse_graph(std::string_view text);
MultigraphPattern parse_pattern(std::string_view text);

/// Canonical form: header, then edges sorted with u < v, each line LF-terminated.
std::string serialize(const Graph& g);
/// Pattern form; edge order (the stable indices) is preserved.
std::string serialize(const MultigraphPattern& m);

}  // namespace gallai
