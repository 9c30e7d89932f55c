#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covlab/covering.hpp"
#include "covlab/perm.hpp"
#include "covlab/rational.hpp"
#include "covlab/uniformity.hpp"

namespace covlab {

// A uniform structure together with a finite group of structure-preserving
// permutations (each generator and its inverse must map every base to an
// admissible covering).
class DynamicalInstance {
 public:
  DynamicalInstance(UniformStructure structure, std::vector<Perm> generators,
                    int group_cap = kDefaultGroupCap);

  const UniformStructure& structure() const { return structure_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& group() const { return group_; }
  int ground_size() const { return structure_.ground().size(); }

 private:
  UniformStructure structure_;
  std::vector<Perm> generators_;
  std::vector<Perm> group_;
};

struct InvariantReport {
  std::optional<Rat> mu_value;
  std::optional<Rat> omega_lower;
  std::optional<Rat> omega_upper;
  std::optional<Subset> witness_f;
  std::optional<Covering> witness_v;
  bool exact = false;
  std::string verdict;
};

// Image covering {g(U) : U in u}, canonical.
Covering image_cover(const Perm& g, const Covering& u);

// Exact mean matching number: sup over nonempty F of
// min over g in group of mu(F, gF, finest) / |F|. The quantifiers over
// group subsets and admissible coverings are realized at the full group and
// the finest base (both monotone reductions). witness_f is the first F in
// mask order attaining the value. Guarded to ground <= kExactMuMaxGround,
// |group| <= kExactMuMaxGroup.
InvariantReport exact_mu(const DynamicalInstance& d);

// One F-witness term: min over g in e of mu(f, gf, finest)/|f|. A certified
// value for the given pair, not a bound on the instance invariant.
Rat mu_lower_bound(const DynamicalInstance& d, const Subset& f, std::span<const Perm> e);

// Exact asymptotic complexity: max over admissible canonical coverings U of
// the min over admissible canonical V refining U of
// max_g N(V join gV) / N(V). Canonical enumeration is lossless because every
// quantity involved is a refinement-class function. Guarded to
// ground <= kExactOmegaMaxGround.
InvariantReport exact_omega(const DynamicalInstance& d);

struct OmegaSearchResult {
  Rat best_ratio;
  Covering witness_v;
  std::vector<Rat> ratios;  // per candidate
};

// Min over the given candidates (each must be admissible and refine u) of
// max_g N(V join gV)/N(V); an upper bound on the inner infimum.
OmegaSearchResult omega_upper_search(const DynamicalInstance& d, std::span<const Perm> e,
                                     const Covering& u, std::span<const Covering> candidates);

// Witness covering {U \ f} + {St(x, star_power(u1, depth-1)) \ (f \ {x})};
// requires the result admissible (every finest-base member may contain at
// most one point of f) and certifies N(V) >= |f|.
Covering excised_candidate(const DynamicalInstance& d, const Covering& u1, const Subset& f,
                           int star_depth);

// N(join of g(v), g in e) / N(v).
Rat free_product_ratio(const DynamicalInstance& d, std::span<const Perm> e, const Covering& v);

// Finite model of topological freeness: every non-identity member of e
// moves every point.
bool is_topologically_free(const DynamicalInstance& d, std::span<const Perm> e);

struct InequalityReport {
  InvariantReport mu;
  InvariantReport omega;
  bool omega_in_range = false;   // 1 <= omega <= 2
  bool first_main_holds = false; // omega >= 2 - mu
  std::string verdict;
  std::string caveat;
};

// Evaluates both exact invariants and checks 1 <= omega <= 2 and
// omega >= 2 - mu.
InequalityReport check_inequalities(const DynamicalInstance& d);

// All canonical admissible coverings of the structure (antichains of
// nonempty subsets covering the ground set, refined by the finest base).
// Exponential; intended for small grounds.
std::vector<Covering> enumerate_admissible_canonical(const UniformStructure& s);

}  // namespace covlab
