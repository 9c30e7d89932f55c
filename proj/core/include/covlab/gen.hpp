#pragma once

#include <cstdint>
#include <vector>

#include "covlab/dynamics.hpp"
#include "covlab/matching.hpp"
#include "covlab/uniformity.hpp"

namespace covlab::gen {

// SplitMix64: portable, deterministic across platforms and standard-library
// versions (std distributions are not).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool percent(int p) { return below(100) < p; }
};

Subset random_subset(Rng& rng, int ground, bool nonempty);
Covering random_covering(Rng& rng, const GroundSet& ground);
Partition random_partition(Rng& rng, const GroundSet& ground);

// Always-valid chain: one of [C], [{X}, P], [canonical(C*), C],
// [canonical(C**), canonical(C*), C].
UniformStructure random_chain(Rng& rng, int ground);

// Random coarsening of the finest base (plus optional extra members), so
// admissibility holds by construction.
Covering random_admissible(Rng& rng, const UniformStructure& s);

// Generators that pass the automorphism validation (rejection sampled with
// an identity fallback).
std::vector<Perm> random_automorphisms(Rng& rng, const UniformStructure& s, int count);

Perm random_perm(Rng& rng, int n);
BipartiteGraph random_bigraph(Rng& rng, int max_left, int max_right);

}  // namespace covlab::gen
