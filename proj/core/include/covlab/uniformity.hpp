#pragma once

#include <vector>

#include "covlab/covering.hpp"

namespace covlab {

// Disjoint nonempty blocks covering the ground set.
class Partition {
 public:
  Partition(GroundSet ground, std::vector<Subset> blocks);
  const std::vector<Subset>& blocks() const { return blocks_; }
  const GroundSet& ground() const { return ground_; }
  Subset block_of(int x) const;

 private:
  GroundSet ground_;
  std::vector<Subset> blocks_;
};

// Finite stand-in for a uniformity: a chain of base coverings, coarsest to
// finest, each star-refined by the next. A covering is admissible exactly
// when the finest base refines it.
class UniformStructure {
 public:
  UniformStructure(GroundSet ground, std::vector<Covering> bases);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Covering>& bases() const { return bases_; }
  const Covering& finest() const { return bases_.back(); }

 private:
  GroundSet ground_;
  std::vector<Covering> bases_;
};

bool is_admissible(const Covering& w, const UniformStructure& s);

// Blocks of x -> intersection of the stars of x in every base. Verifies the
// partition property and throws ValidationError when the structure's stars
// fail it (possible for truncated chains whose finest base is not
// refinement-equivalent to a partition).
Partition zero_partition(const UniformStructure& s);

// Exact uniform complexity: the least cardinality of an admissible covering
// refining u.
//
// Reduction: a covering V refining u and admissible may, member by member,
// be replaced by the union of all finest-base members inside the witnessing
// member of u; this preserves refinement, admissibility and cardinality.
// Hence N(u) is the minimum number of sets U~ = union of finest-base members
// inside U (U over canonical(u)) needed to contain every canonical
// finest-base member, an exact set-cover instance. When the finest base is a
// partition the targets are its blocks and this is a plain quotient cover.
int complexity(const Covering& u, const UniformStructure& s);

// Same value plus an optimal admissible refinement witnessing it.
struct ComplexityWitness {
  int value;
  Covering witness;
};
ComplexityWitness complexity_with_witness(const Covering& u, const UniformStructure& s);

// Independent oracle: dynamic programming over the lattice of covered
// finest-base members, with every nonempty subset of every member of u as a
// candidate. Guarded to ground size <= kBruteForceMaxGround.
int complexity_bruteforce(const Covering& u, const UniformStructure& s);

}  // namespace covlab
