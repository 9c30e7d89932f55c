#pragma once

#include <optional>
#include <span>
#include <vector>

#include "covlab/subset.hpp"

namespace covlab {

struct SetCoverSolution {
  int size = 0;
  std::vector<int> chosen;  // candidate indices, ascending
};

// Exact minimum set cover of {0..universe-1} by the given candidate sets.
// Deterministic branch and bound: greedy upper bound, counting lower bound,
// branching on the least-covered element, candidates tried by descending
// fresh coverage then index. Returns nullopt when some element is uncovered
// by every candidate.
std::optional<SetCoverSolution> min_set_cover(int universe, std::span<const Subset> candidates);

}  // namespace covlab
