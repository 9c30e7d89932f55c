#pragma once

#include <span>
#include <vector>

#include "covlab/covering.hpp"
#include "covlab/partial_map.hpp"
#include "covlab/perm.hpp"

namespace covlab {

class BipartiteGraph {
 public:
  BipartiteGraph(int left, int right);

  int left_size() const { return left_; }
  int right_size() const { return right_; }
  void add_edge(int x, int y);
  bool has_edge(int x, int y) const;
  // Sorted unique neighbor list of left vertex x.
  const std::vector<int>& neighbors(int x) const { return adj_[x]; }
  Subset neighborhood(const Subset& s) const;

 private:
  int left_, right_;
  std::vector<std::vector<int>> adj_;
};

// Maximum matching by augmenting paths, deterministic vertex order.
PartialMap max_matching(const BipartiteGraph& b);

int matching_number(const BipartiteGraph& b);

// |left| - max over S of (|S| - |N(S)|), by subset enumeration
// (|left| <= kDeficiencyMaxLeft). Equals the matching number.
int deficiency_bound(const BipartiteGraph& b);

bool has_perfect_matching(const BipartiteGraph& b);

// Bipartite graph on (e, f) with an edge when some member of u contains
// both endpoints; left_elems/right_elems give the ground elements behind
// the vertex indices.
struct CoveringGraph {
  std::vector<int> left_elems, right_elems;
  BipartiteGraph graph;
};
CoveringGraph covering_graph(const Subset& e, const Subset& f, const Covering& u);

// mu(E, F, U): matching number of the covering graph.
int mu(const Subset& e, const Subset& f, const Covering& u);

// Maximum matching of the covering graph as a ground-element map.
PartialMap covering_matching(const Subset& e, const Subset& f, const Covering& u);

// Transfers a maximum matching of B(F0, g F0, U) along a bijection
// phi: F1 -> F0 satisfying, for every member M of u and of every g^{-1}(u)
// (raw lists): phi(x) in M implies x in M. Returns, per g, the matching
// psi1(x) = g(phi^{-1}(g^{-1}(psi0(phi(x))))) of B(F1, g F1, U), which has
// the same domain size as psi0.
std::vector<PartialMap> transfer_matching(const Covering& u, std::span<const Perm> e_maps,
                                          const Subset& f0, const Subset& f1,
                                          const PartialMap& phi);

// The compatible-matching construction: from a maximum matching phi0 of
// B(E, F, U), iterate each point out of E via phi0 (at most n steps) and
// keep the exits. The result phi1 is an injective matching of
// B(E \ F, F \ E, star_power(U, n-1)) with
// |dom phi1| >= mu(E, F, U) - (1 + 1/n)|E cap F|.
PartialMap compatible_matching(const Covering& u, const Subset& e, const Subset& f, int n);

// For admissible u, v, w with u <= v, u <= w and complexity(u) equal to
// |canonical(v)|: a perfect injective map from canonical(v) members to
// canonical(w) members matching only intersecting pairs.
PartialMap refinement_injection(const Covering& u, const Covering& v, const Covering& w,
                                const UniformStructure& s);

}  // namespace covlab
