#include <doctest.h>

#include "covlab/errors.hpp"
#include "covlab/gen.hpp"
#include "covlab/matching.hpp"
#include "covlab/uniformity.hpp"

using namespace covlab;

namespace {

Covering cov(int n, std::vector<std::vector<int>> members) {
  std::vector<Subset> ms;
  for (const auto& m : members) {
    Subset s;
    for (int e : m) s.add(e);
    ms.push_back(s);
  }
  return Covering(GroundSet(n), std::move(ms));
}

Subset sub(std::initializer_list<int> es) { return Subset::of(es); }

UniformStructure singleton_structure(int n) {
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < n; ++i) singles.push_back({i});
  return UniformStructure(GroundSet(n), {cov(n, singles)});
}

BipartiteGraph complete(int l, int r) {
  BipartiteGraph b(l, r);
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < r; ++y) b.add_edge(x, y);
  return b;
}

}  // namespace

TEST_CASE("maximum matching basics") {
  BipartiteGraph b(2, 2);
  b.add_edge(0, 0);
  b.add_edge(1, 1);
  CHECK(matching_number(b) == 2);

  BipartiteGraph shared(2, 1);
  shared.add_edge(0, 0);
  shared.add_edge(1, 0);
  CHECK(matching_number(shared) == 1);

  CHECK(matching_number(complete(3, 2)) == 2);
  CHECK_THROWS_AS(BipartiteGraph(2, 2).add_edge(0, 5), ValidationError);
}

TEST_CASE("deficiency bound examples") {
  CHECK(deficiency_bound(complete(3, 2)) == 2);
  BipartiteGraph edgeless(4, 3);
  CHECK(deficiency_bound(edgeless) == 0);
  BipartiteGraph perfect(3, 3);
  for (int i = 0; i < 3; ++i) perfect.add_edge(i, i);
  CHECK(deficiency_bound(perfect) == 3);
  CHECK_THROWS_AS(deficiency_bound(complete(21, 2)), GuardError);
}

TEST_CASE("perfect matching examples") {
  CHECK(has_perfect_matching(complete(2, 2)));
  BipartiteGraph shared(2, 2);
  shared.add_edge(0, 0);
  shared.add_edge(1, 0);
  CHECK_FALSE(has_perfect_matching(shared));
}

TEST_CASE("hall-ore identity on random graphs") {
  gen::Rng rng(9001);
  for (int t = 0; t < 400; ++t) {
    BipartiteGraph b = gen::random_bigraph(rng, 10, 10);
    int nu = matching_number(b);
    CHECK(nu == deficiency_bound(b));
    // Hall condition by enumeration.
    bool hall = true;
    for (std::uint64_t s = 1; s < (1ull << b.left_size()); ++s) {
      Subset set;
      for (int x = 0; x < b.left_size(); ++x)
        if ((s >> x) & 1) set.add(x);
      if (b.neighborhood(set).count() < set.count()) hall = false;
    }
    CHECK(has_perfect_matching(b) == hall);
  }
}

TEST_CASE("covering graph examples") {
  Covering u = cov(3, {{0, 1}, {1, 2}});
  CoveringGraph cg = covering_graph(sub({0, 1}), sub({1, 2}), u);
  CHECK(cg.graph.has_edge(0, 0));   // (0,1)
  CHECK(cg.graph.has_edge(1, 0));   // (1,1)
  CHECK(cg.graph.has_edge(1, 1));   // (1,2)
  CHECK_FALSE(cg.graph.has_edge(0, 1));
  CHECK(mu(sub({0, 1}), sub({1, 2}), u) == 2);

  Covering singles = cov(4, {{0}, {1}, {2}, {3}});
  CHECK(mu(sub({0, 1, 2}), sub({1, 2, 3}), singles) == 2);  // |e cap f|

  Covering whole = cov(4, {{0, 1, 2, 3}});
  CHECK(mu(sub({0, 1, 2}), sub({1, 3}), whole) == 2);  // min(|e|,|f|)
}

TEST_CASE("mu is antitone in refinement and symmetric") {
  gen::Rng rng(555);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + rng.below(7);
    GroundSet g(n);
    Covering u = gen::random_covering(rng, g);
    Covering fine = join(u, gen::random_covering(rng, g));
    Subset e = gen::random_subset(rng, n, true);
    Subset f = gen::random_subset(rng, n, true);
    CHECK(mu(e, f, fine) <= mu(e, f, u));
    CHECK(mu(e, f, u) == mu(f, e, u));
  }
}

TEST_CASE("transfer matching identity case") {
  Covering u = cov(4, {{0, 1}, {1, 2}, {2, 3}});
  Subset f = sub({0, 2});
  PartialMap id(4);
  id.set(0, 0);
  id.set(2, 2);
  std::vector<Perm> e{Perm({1, 0, 3, 2})};
  auto res = transfer_matching(u, e, f, f, id);
  REQUIRE(res.size() == 1);
  PartialMap psi0 = covering_matching(f, e[0].apply(f), u);
  CHECK(res[0].size() == psi0.size());
}

TEST_CASE("transfer matching swaps within common members") {
  // Ground {0,1,2,3}, u = {{0,1},{2,3}}, g = (0 1)(2 3); Phi swaps each
  // point with its block sibling, so the hypothesis holds with Phi != id.
  Covering u = cov(4, {{0, 1}, {2, 3}});
  Perm g({1, 0, 3, 2});
  Subset f0 = sub({0, 2});
  Subset f1 = sub({1, 3});
  PartialMap phi(4);
  phi.set(1, 0);
  phi.set(3, 2);
  std::vector<Perm> e{g};
  auto res = transfer_matching(u, e, f0, f1, phi);
  CHECK(res[0].size() == 2);
  CHECK(res[0].size() == mu(f0, g.apply(f0), u));
  CHECK(res[0].image(1) == 0);
  CHECK(res[0].image(3) == 2);
  CHECK(res[0].size() <= mu(f1, g.apply(f1), u));

  // The identity transfer stays available on overlapping sets.
  Covering path = cov(4, {{0, 1}, {1, 2}, {2, 3}});
  Subset f = sub({1, 2});
  PartialMap id(4);
  id.set(1, 1);
  id.set(2, 2);
  auto res2 = transfer_matching(path, e, f, f, id);
  CHECK(res2[0].size() == mu(f, g.apply(f), path));
}

TEST_CASE("transfer matching rejects a broken hypothesis") {
  Covering u = cov(3, {{0}, {1}, {2}});
  Subset f0 = sub({0}), f1 = sub({1});
  PartialMap phi(3);
  phi.set(1, 0);  // member {0} contains phi(1)=0 but not 1
  std::vector<Perm> e{Perm::identity(3)};
  CHECK_THROWS_AS(transfer_matching(u, e, f0, f1, phi), ValidationError);
}

TEST_CASE("compatible matching trace") {
  Covering u = cov(3, {{0, 1}, {1, 2}});
  PartialMap phi1 = compatible_matching(u, sub({0, 1}), sub({1, 2}), 2);
  CHECK(phi1.size() == 1);
  CHECK(phi1.defined(0));
  CHECK(phi1.image(0) == 2);
}

TEST_CASE("compatible matching with disjoint sets returns the maximum matching") {
  gen::Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + rng.below(5);
    GroundSet g(n);
    Covering u = gen::random_covering(rng, g);
    Subset e, f;
    for (int x = 0; x < n; ++x) (x % 2 ? e : f).add(x);
    int steps = 1 + rng.below(4);
    PartialMap phi1 = compatible_matching(u, e, f, steps);
    CHECK(phi1.size() == mu(e, f, u));
  }
}

TEST_CASE("compatible matching with equal sets may be empty but is valid") {
  Covering u = cov(3, {{0, 1}, {1, 2}});
  Subset e = sub({0, 1, 2});
  PartialMap phi1 = compatible_matching(u, e, e, 3);
  CHECK(phi1.size() == 0);
}

TEST_CASE("compatible matching construction holds on random instances") {
  gen::Rng rng(777);
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + rng.below(9);
    GroundSet g(n);
    Covering u = gen::random_covering(rng, g);
    Subset e = gen::random_subset(rng, n, true);
    Subset f = gen::random_subset(rng, n, true);
    CHECK_NOTHROW(compatible_matching(u, e, f, 1 + rng.below(4)));
  }
}

TEST_CASE("iterate chains of an injection collide only trivially") {
  // f^m(x) = f^n(y) with x,y outside the image forces m = n, x = y.
  gen::Rng rng(31337);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + rng.below(8);
    PartialMap f(n);
    Subset dom = gen::random_subset(rng, n, true);
    std::vector<int> targets;
    for (int i = 0; i < n; ++i) targets.push_back(i);
    for (int x = dom.next(0); x >= 0; x = dom.next(x + 1)) {
      int pick = rng.below(static_cast<int>(targets.size()));
      f.set(x, targets[pick]);
      targets.erase(targets.begin() + pick);
    }
    Subset image;
    for (int x = 0; x < n; ++x)
      if (f.defined(x)) image.add(f.image(x));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (image.contains(x) || image.contains(y)) continue;
        for (int m = 1; m <= 4; ++m)
          for (int k = 1; k <= 4; ++k) {
            auto fx = f.iterate(x, m), fy = f.iterate(y, k);
            if (fx && fy && *fx == *fy) CHECK((m == k && x == y));
          }
      }
  }
}

TEST_CASE("refinement injection examples") {
  UniformStructure s = singleton_structure(4);
  Covering u = cov(4, {{0, 1}, {2, 3}});

  PartialMap same = refinement_injection(u, u, u, s);
  CHECK(same.size() == 2);
  for (int i = 0; i < 2; ++i) CHECK(same.image(i) == i);

  Covering w = cov(4, {{0}, {1}, {2, 3}});
  PartialMap phi = refinement_injection(u, u, w, s);
  CHECK(phi.size() == 2);
  CHECK(w.members()[phi.image(0)].subset_of(sub({0, 1})));
  CHECK(phi.image(1) == 2);  // {2,3} -> {2,3}

  // |canonical(v)| > N(u): three pairs refine {{0,1,2}} with N = 1.
  UniformStructure s3 = singleton_structure(3);
  Covering u3 = cov(3, {{0, 1, 2}});
  Covering v3 = cov(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(refinement_injection(u3, v3, v3, s3), ValidationError);
}

TEST_CASE("refinement injection is perfect with intersecting pairs") {
  gen::Rng rng(60);
  for (int t = 0; t < 120; ++t) {
    const int n = 3 + rng.below(6);
    UniformStructure s = gen::random_chain(rng, n);
    Covering u = gen::random_admissible(rng, s);
    ComplexityWitness cw = complexity_with_witness(u, s);
    Covering w = join(u, s.finest());
    PartialMap phi = refinement_injection(u, cw.witness, w, s);
    Covering cv = cw.witness.canonicalized(), cw2 = w.canonicalized();
    REQUIRE(phi.size() == cv.size());
    for (int i = 0; i < cv.size(); ++i)
      CHECK(cv.members()[i].intersects(cw2.members()[phi.image(i)]));
  }
}
