#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gallai::cli {

enum Exit : int {
  exit_ok = 0,
  exit_violation = 1,
  exit_usage = 2,  // also parse errors
  exit_budget = 3,
  exit_disconnected = 4,
  exit_not_intersecting = 5,
};

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a(std::string_view bytes);
/// "fnv1a:" + 16 hex digits
std::string digest(std::string_view bytes);

}  // namespace gallai::cli
