#include "covlab/uniformity.hpp"

#include <algorithm>
#include <map>

#include "covlab/errors.hpp"
#include "covlab/set_cover.hpp"

namespace covlab {

Partition::Partition(GroundSet ground, std::vector<Subset> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  Subset seen;
  for (const auto& b : blocks_) {
    if (b.empty()) throw ValidationError("partition block is empty");
    if (b.intersects(seen)) throw ValidationError("partition blocks overlap");
    seen |= b;
  }
  if (seen != ground_.all()) throw ValidationError("partition blocks do not cover");
  std::sort(blocks_.begin(), blocks_.end());
}

Subset Partition::block_of(int x) const {
  for (const auto& b : blocks_)
    if (b.contains(x)) return b;
  throw ValidationError("element outside the partition ground set");
}

UniformStructure::UniformStructure(GroundSet ground, std::vector<Covering> bases)
    : ground_(ground), bases_(std::move(bases)) {
  if (bases_.empty()) throw ValidationError("uniform structure needs at least one base");
  for (const auto& b : bases_)
    if (b.ground_size() != ground_.size())
      throw ValidationError("base covering on a different ground set");
  for (std::size_t i = 0; i + 1 < bases_.size(); ++i) {
    if (!refines(bases_[i], bases_[i + 1]))
      throw ValidationError("chain invariant violated: base " + std::to_string(i + 1) +
                            " does not refine base " + std::to_string(i));
    if (!is_star_refinement(bases_[i], bases_[i + 1]))
      throw ValidationError("star-chain invariant violated between bases " + std::to_string(i) +
                            " and " + std::to_string(i + 1));
  }
}

bool is_admissible(const Covering& w, const UniformStructure& s) {
  if (w.ground_size() != s.ground().size())
    throw ValidationError("covering on a different ground set than the structure");
  return refines(w, s.finest());
}

Partition zero_partition(const UniformStructure& s) {
  const int n = s.ground().size();
  std::vector<Subset> blocks;
  for (int x = 0; x < n; ++x) {
    Subset p = s.ground().all();
    for (const auto& base : s.bases()) p &= star_of_point(x, base);
    blocks.push_back(p);
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  Subset seen;
  for (const auto& b : blocks) {
    if (b.intersects(seen))
      throw ValidationError(
          "zero-partition property violated: point stars overlap without coinciding");
    seen |= b;
  }
  COVLAB_CHECK(seen == s.ground().all(), "point stars must cover the ground set");
  return Partition(s.ground(), std::move(blocks));
}

namespace {

// Shared reduction behind complexity(): candidates are, per canonical member
// U of u, the union of the canonical finest-base members inside U, encoded
// as a mask over those target members.
struct ComplexityInstance {
  std::vector<Subset> targets;       // canonical finest-base members
  std::vector<Subset> target_masks;  // per member of canonical(u)
  Covering cu;
};

ComplexityInstance build_instance(const Covering& u, const UniformStructure& s) {
  if (!is_admissible(u, s)) throw ValidationError("complexity of an inadmissible covering");
  ComplexityInstance inst{{}, {}, u.canonicalized()};
  inst.targets = s.finest().canonicalized().members();
  const int t = static_cast<int>(inst.targets.size());
  for (const auto& m : inst.cu.members()) {
    Subset mask;
    for (int i = 0; i < t; ++i)
      if (inst.targets[i].subset_of(m)) mask.add(i);
    inst.target_masks.push_back(mask);
  }
  return inst;
}

}  // namespace

int complexity(const Covering& u, const UniformStructure& s) {
  return complexity_with_witness(u, s).value;
}

ComplexityWitness complexity_with_witness(const Covering& u, const UniformStructure& s) {
  ComplexityInstance inst = build_instance(u, s);
  auto sol = min_set_cover(static_cast<int>(inst.targets.size()), inst.target_masks);
  COVLAB_CHECK(sol.has_value(), "admissible covering must yield a feasible cover");
  std::vector<Subset> members;
  for (int j : sol->chosen) {
    Subset m;
    const Subset& mask = inst.target_masks[j];
    for (int i = mask.next(0); i >= 0; i = mask.next(i + 1)) m |= inst.targets[i];
    members.push_back(m);
  }
  Covering witness(u.ground(), std::move(members));
  COVLAB_CHECK(witness.size() == sol->size,
               "optimal witness must stay optimal after canonicalization");
  return ComplexityWitness{sol->size, std::move(witness)};
}

int complexity_bruteforce(const Covering& u, const UniformStructure& s) {
  const int n = s.ground().size();
  if (n > kBruteForceMaxGround)
    throw GuardError("complexity_bruteforce guarded to ground <= " +
                     std::to_string(kBruteForceMaxGround));
  if (!is_admissible(u, s)) throw ValidationError("complexity of an inadmissible covering");

  std::vector<Subset> targets = s.finest().canonicalized().members();
  const int t = static_cast<int>(targets.size());
  if (t > 16) throw GuardError("complexity_bruteforce guarded to <= 16 finest-base members");

  // Every nonempty subset of every member of u, as a mask over the targets.
  std::vector<bool> mask_seen(std::size_t{1} << t, false);
  std::vector<std::uint32_t> masks;
  for (const auto& member : u.members()) {
    auto elems = member.elements();
    const int k = static_cast<int>(elems.size());
    for (std::uint64_t pick = 1; pick < (1ull << k); ++pick) {
      Subset sub;
      for (int i = 0; i < k; ++i)
        if ((pick >> i) & 1) sub.add(elems[i]);
      std::uint32_t mask = 0;
      for (int i = 0; i < t; ++i)
        if (targets[i].subset_of(sub)) mask |= 1u << i;
      if (mask && !mask_seen[mask]) {
        mask_seen[mask] = true;
        masks.push_back(mask);
      }
    }
  }

  // BFS over covered-target states.
  const std::uint32_t all = (t == 32 ? ~0u : (1u << t) - 1);
  std::vector<int> dist(std::size_t{1} << t, -1);
  dist[0] = 0;
  std::vector<std::uint32_t> frontier{0};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t state : frontier)
      for (std::uint32_t m : masks) {
        std::uint32_t to = state | m;
        if (dist[to] < 0) {
          dist[to] = depth;
          if (to == all) return depth;
          next.push_back(to);
        }
      }
    frontier = std::move(next);
  }
  COVLAB_CHECK(false, "admissible covering must yield a feasible cover");
  return -1;
}

}  // namespace covlab
