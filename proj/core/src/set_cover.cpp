#include "covlab/set_cover.hpp"

#include <algorithm>

#include "covlab/errors.hpp"

namespace covlab {

namespace {

// Exact branch and bound. Deterministic throughout: greedy upper bound,
// two lower bounds (counting, and a greedy family of uncovered elements
// with pairwise disjoint candidate sets, each forcing a distinct pick),
// unit propagation for elements with a single remaining candidate,
// branching on the least-covered element with candidates ordered by
// descending fresh coverage then index.
struct Search {
  Subset all;
  std::vector<Subset> cands;      // deduplicated, dominance-reduced
  std::vector<int> cand_ids;      // original indices
  std::vector<Subset> elem_cands; // per element: mask of candidate indices
  std::vector<int> best_chosen;
  int best = 0;
  std::vector<int> chosen;

  int greedy() const {
    Subset uncovered = all;
    int picks = 0;
    while (!uncovered.empty()) {
      int pick = -1, pick_gain = 0;
      for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
        int gain = (cands[i] & uncovered).count();
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = i;
        }
      }
      if (pick < 0) return -1;
      uncovered -= cands[pick];
      ++picks;
    }
    return picks;
  }

  int lower_bound(const Subset& uncovered) const {
    int max_gain = 0;
    for (const auto& c : cands) max_gain = std::max(max_gain, (c & uncovered).count());
    if (max_gain == 0) return -1;
    int counting = (uncovered.count() + max_gain - 1) / max_gain;
    // Elements whose candidate sets are pairwise disjoint need one pick each.
    int independent = 0;
    Subset used;
    for (int e = uncovered.next(0); e >= 0; e = uncovered.next(e + 1))
      if (!elem_cands[e].intersects(used)) {
        used |= elem_cands[e];
        ++independent;
      }
    return std::max(counting, independent);
  }

  void run(Subset covered) {
    // Unit propagation: an uncovered element with one candidate forces it.
    int forced_at = static_cast<int>(chosen.size());
    bool propagated = true;
    while (propagated) {
      propagated = false;
      Subset uncovered = all - covered;
      for (int e = uncovered.next(0); e >= 0; e = uncovered.next(e + 1)) {
        int only = -1, count = 0;
        const Subset& ec = elem_cands[e];
        for (int i = ec.next(0); i >= 0 && count < 2; i = ec.next(i + 1)) {
          only = i;
          ++count;
        }
        if (count == 0) {  // infeasible branch
          chosen.resize(forced_at);
          return;
        }
        if (count == 1 && static_cast<int>(chosen.size()) + 1 < best) {
          chosen.push_back(only);
          covered |= cands[only];
          propagated = true;
          break;
        }
      }
      if (static_cast<int>(chosen.size()) >= best) {
        chosen.resize(forced_at);
        return;
      }
    }

    Subset uncovered = all - covered;
    if (uncovered.empty()) {
      if (static_cast<int>(chosen.size()) < best) {
        best = static_cast<int>(chosen.size());
        best_chosen = chosen;
      }
      chosen.resize(forced_at);
      return;
    }
    int lb = lower_bound(uncovered);
    if (lb < 0 || static_cast<int>(chosen.size()) + lb >= best) {
      chosen.resize(forced_at);
      return;
    }

    int elem = -1, elem_count = -1;
    for (int e = uncovered.next(0); e >= 0; e = uncovered.next(e + 1)) {
      int c = elem_cands[e].count();
      if (elem < 0 || c < elem_count) {
        elem = e;
        elem_count = c;
      }
    }

    std::vector<std::pair<int, int>> order;  // (-fresh coverage, index)
    const Subset& ec = elem_cands[elem];
    for (int i = ec.next(0); i >= 0; i = ec.next(i + 1))
      order.emplace_back(-(cands[i] & uncovered).count(), i);
    std::sort(order.begin(), order.end());
    for (auto [neg, i] : order) {
      (void)neg;
      chosen.push_back(i);
      run(covered | cands[i]);
      chosen.pop_back();
      if (static_cast<int>(chosen.size()) + lb >= best) break;
    }
    chosen.resize(forced_at);
  }
};

}  // namespace

std::optional<SetCoverSolution> min_set_cover(int universe, std::span<const Subset> candidates) {
  if (universe == 0) return SetCoverSolution{0, {}};
  if (universe > kMaxGround) throw GuardError("set cover universe exceeds subset width");
  if (static_cast<int>(candidates.size()) > kMaxGround)
    throw GuardError("set cover supports at most " + std::to_string(kMaxGround) + " candidates");

  // Dominance reduction: drop candidates contained in another (ties keep
  // the lowest original index).
  Search s;
  s.all = Subset::full(universe);
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    bool dominated = false;
    for (int j = 0; j < static_cast<int>(candidates.size()) && !dominated; ++j) {
      if (i == j || !candidates[i].subset_of(candidates[j])) continue;
      if (candidates[i] != candidates[j] || j < i) dominated = true;
    }
    if (!dominated) {
      s.cands.push_back(candidates[i]);
      s.cand_ids.push_back(i);
    }
  }
  s.elem_cands.resize(universe);
  for (int e = 0; e < universe; ++e)
    for (int i = 0; i < static_cast<int>(s.cands.size()); ++i)
      if (s.cands[i].contains(e)) s.elem_cands[e].add(i);

  int ub = s.greedy();
  if (ub < 0) return std::nullopt;
  s.best = ub + 1;
  s.run(Subset{});
  COVLAB_CHECK(s.best <= ub, "branch and bound must match or beat greedy");
  std::vector<int> chosen;
  for (int i : s.best_chosen) chosen.push_back(s.cand_ids[i]);
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  COVLAB_CHECK(static_cast<int>(chosen.size()) == s.best, "chosen picks must be distinct");
  return SetCoverSolution{s.best, std::move(chosen)};
}

}  // namespace covlab
