#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace covlab {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int workers = 1;
  // Case counts per randomized battery (defaults are the acceptance scale).
  int hall_cases = 1000;
  int cover_cases = 500;
  int compatible_cases = 1000;
  int injection_cases = 200;
  int reduction_cases = 200;
  // Testing hook: criterion id whose first case is deliberately corrupted.
  std::optional<std::string> inject_fault;
  // Directory for counterexample reproduction files.
  std::string repro_dir = ".";
};

struct CriterionResult {
  std::string id;
  std::string name;
  long long cases = 0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full battery: randomized identities (Hall/Ore, set-cover oracle,
// compatible matchings, refinement injections, quantifier reductions, main
// inequalities) plus the pinned finite computations (Cantor and circle
// covering numbers, subshift entropies, construction replays, generator
// change). Deterministic for a fixed seed and independent of `workers`.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace covlab
