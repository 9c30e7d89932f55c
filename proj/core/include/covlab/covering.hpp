#pragma once

#include <span>
#include <string>
#include <vector>

#include "covlab/partial_map.hpp"
#include "covlab/subset.hpp"

namespace covlab {

class UniformStructure;

// Non-empty finite ground set {0..size-1}, guarded by Limits::ground_limit().
class GroundSet {
 public:
  explicit GroundSet(int size);
  int size() const { return size_; }
  Subset all() const { return Subset::full(size_); }
  bool operator==(const GroundSet&) const = default;

 private:
  int size_;
};

// Family of subsets whose union is the whole ground set.
//
// Canonical form: no empty member, no duplicates, no member contained in
// another, members sorted by the fixed total order on subsets. Canonical
// and raw forms mutually refine each other, so every refinement-class
// quantity (N, admissibility, coarsening) is unaffected by canonicalization.
class Covering {
 public:
  // Canonicalizes unless canonicalize=false (raw form, for replaying
  // constructions member by member). Rejects non-covering families.
  Covering(GroundSet ground, std::vector<Subset> members, bool canonicalize = true);

  static Covering raw(GroundSet ground, std::vector<Subset> members) {
    return Covering(ground, std::move(members), false);
  }

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  const std::vector<Subset>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool canonical() const { return canonical_; }

  Covering canonicalized() const;

  bool operator==(const Covering&) const = default;
  std::string to_string() const;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
  bool canonical_;
};

// True iff every member of `fine` lies inside some member of `coarse`,
// i.e. coarse <= fine in the refinement order.
bool refines(const Covering& coarse, const Covering& fine);

// Mutual refinement (equality of refinement classes).
bool same_class(const Covering& a, const Covering& b);

// All intersections picking one member from each input; canonical.
Covering join(std::span<const Covering> coverings);
Covering join(const Covering& a, const Covering& b);

// Union of the member lists; canonical.
Covering meet(std::span<const Covering> coverings);
Covering meet(const Covering& a, const Covering& b);

// Union of the members meeting s.
Subset star_of_set(const Subset& s, const Covering& cover);
Subset star_of_point(int x, const Covering& cover);

// Iterated star covering; n = 0 returns the input unchanged, n >= 1
// replaces every member by its star (raw, not canonicalized: stars of
// distinct members may nest).
Covering star_power(const Covering& cover, int n);

// coarse <=* fine, i.e. refines(coarse, star_power(fine, 1)).
bool is_star_refinement(const Covering& coarse, const Covering& fine);

// {U \ s : U in u} together with the stars St(x, v) of the excised points;
// canonical. The join of u and v always refines the result.
Covering excise_with_stars(const Covering& u, const Covering& v, const Subset& s);

// {U \ f : U in u} together with the patch sets; requires f within the
// union of the patch.
Covering excise_finite(const Covering& u, std::span<const Subset> v_patch, const Subset& f);

// For u with complexity(u) == |canonical(u)| and u <=* v: the injective
// assignment of a point to each canonical member U such that St(point, v)
// is inside U and inside no other member. Points are scanned in ascending
// index; the first witness is taken. Map is indexed by the member's
// position in canonical(u).
PartialMap point_projection(const Covering& u, const Covering& v, const UniformStructure& structure);

}  // namespace covlab
