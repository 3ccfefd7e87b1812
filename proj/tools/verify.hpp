#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/subdivision.hpp"
#include "gallai/transversal.hpp"

namespace gallai::cli {

struct SuiteOptions {
  int n = 7;              // order cap for exhaustive suites
  int m = 3;              // pattern size cap for prop1
  std::uint64_t seed = 42;
  int cases = 0;          // 0: suite default
  EnumerationOptions enumeration = sets_only({});
  SolverOptions solver;
};

// tau <= max{5n^(2/3), 2m^2 n^(1/3)} tallies, only where m^3 < n
struct BoundTally {
  int checked = 0;
  int violations = 0;
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  int skipped = 0;
  int violations = 0;
  BoundTally bound;
  // first failing instance (suites run in increasing size, so it is a smallest one)
  std::optional<std::string> reproducer;
  std::string detail;
  std::vector<std::string> notes;

  bool passed() const { return violations == 0 && bound.violations == 0; }
};

SuiteReport run_folklore(const SuiteOptions& opt);
SuiteReport run_prop1(const SuiteOptions& opt);
SuiteReport run_lemmas(const SuiteOptions& opt);
SuiteReport run_bounds(const SuiteOptions& opt);

/// Dispatch by name; nullopt for an unknown suite.
std::optional<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt);

/// Patterns of the prop1 suite with at most max_m edges: K2, C1, P3, K1_3, C2.
std::vector<MultigraphPattern> prop1_patterns(int max_m);

}  // namespace gallai::cli
