#include <doctest.h>

#include <cmath>

#include "covlab/errors.hpp"
#include "covlab/gen.hpp"
#include "covlab/metric.hpp"
#include "covlab/oracle.hpp"

using namespace covlab;

namespace {

MetricSpace equilateral(int n, const Rat& side) {
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, side));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  return MetricSpace(n, std::move(d));
}

MetricSpace path3() {
  // 0 - 1 - 2 with unit steps.
  std::vector<std::vector<Rat>> d{{Rat(0), Rat(1), Rat(2)},
                                  {Rat(1), Rat(0), Rat(1)},
                                  {Rat(2), Rat(1), Rat(0)}};
  return MetricSpace(3, std::move(d));
}

struct GuardRaiser {
  GuardRaiser() { Limits::set_ground_limit(kMaxGround); }
} raise_guard;

}  // namespace

TEST_CASE("metric axioms are validated") {
  std::vector<std::vector<Rat>> bad{{Rat(0), Rat(5)}, {Rat(5), Rat(1)}};
  CHECK_THROWS_WITH_AS(MetricSpace(2, bad), doctest::Contains("diagonal"), ValidationError);
  std::vector<std::vector<Rat>> asym{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
  CHECK_THROWS_WITH_AS(MetricSpace(2, asym), doctest::Contains("asymmetric"), ValidationError);
  std::vector<std::vector<Rat>> tri{{Rat(0), Rat(1), Rat(3)},
                                    {Rat(1), Rat(0), Rat(1)},
                                    {Rat(3), Rat(1), Rat(0)}};
  CHECK_THROWS_WITH_AS(MetricSpace(3, tri), doctest::Contains("triangle"), ValidationError);
  // Pseudo-metric: zero distance between distinct points is fine.
  std::vector<std::vector<Rat>> pseudo{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  CHECK_NOTHROW(MetricSpace(2, pseudo));
}

TEST_CASE("ball cover examples") {
  MetricSpace eq = equilateral(3, Rat(1));
  CHECK(ball_cover(eq, Rat(2)).members() == std::vector<Subset>{Subset::full(3)});
  CHECK(ball_cover(eq, Rat(1)).members() ==
        std::vector<Subset>{Subset::of({0}), Subset::of({1}), Subset::of({2})});
  CHECK(ball_cover(path3(), Rat(3, 2)).members() == std::vector<Subset>{Subset::full(3)});
  CHECK_THROWS_AS(ball_cover(eq, Rat(0)), ValidationError);
}

TEST_CASE("gamma examples and oracle") {
  MetricSpace eq = equilateral(3, Rat(1));
  CHECK(gamma(eq, Rat(1, 2)) == 3);
  CHECK(gamma(eq, Rat(7, 2)) == 1);
  CHECK(gamma(path3(), Rat(3, 2)) == 1);

  gen::Rng rng(10);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + rng.below(7);
    // Random metric via shortest paths over a random complete weighted graph.
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = Rat(1 + rng.below(6), 2);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    MetricSpace m(n, std::move(d));
    Rat r(1 + rng.below(8), 2);
    CHECK(gamma(m, r) == oracle::gamma_bruteforce(m, r));
  }
}

TEST_CASE("gamma is antitone with pinned extremes") {
  MetricSpace circle = MetricSpace::circle_net(16);
  int prev = -1;
  for (int j = 0; j <= 6; ++j) {
    int g = gamma(circle, Rat(1, BigInt(1) << j));
    CHECK(g >= prev);
    prev = g;
  }
  CHECK(gamma(circle, Rat(3)) == 1);           // beyond the diameter
  CHECK(gamma(circle, Rat(1, 1000)) == 16);    // below the least distance
}

TEST_CASE("gamma counts zero-distance classes below the least distance") {
  std::vector<std::vector<Rat>> d{{Rat(0), Rat(0), Rat(1)},
                                  {Rat(0), Rat(0), Rat(1)},
                                  {Rat(1), Rat(1), Rat(0)}};
  MetricSpace m(3, std::move(d));
  CHECK(m.min_positive_distance() == 1);
  CHECK(gamma(m, Rat(1, 7)) == 2);
  CHECK(gamma(m, Rat(5)) == 1);
}

TEST_CASE("cantor net covering numbers") {
  MetricSpace cantor = MetricSpace::cantor_net(6);
  BigInt pow3(1);
  for (int j = 1; j <= 4; ++j) {
    pow3 *= 3;
    CHECK(gamma(cantor, Rat(1, pow3)) == (1 << j));
  }
}

TEST_CASE("dimension slope") {
  MetricSpace cantor = MetricSpace::cantor_net(6);
  std::vector<Rat> radii;
  BigInt pow3(1);
  for (int j = 1; j <= 4; ++j) {
    pow3 *= 3;
    radii.emplace_back(1, pow3);
  }
  SlopeReport rep = dimension_slope(cantor, RadiusGrid(radii));
  CHECK(std::abs(rep.slope - std::log2(2) / std::log2(3)) < 1e-9);

  MetricSpace one(1, {{Rat(0)}});
  std::vector<Rat> rs{Rat(1, 2), Rat(1, 4), Rat(1, 8)};
  CHECK(dimension_slope(one, RadiusGrid(rs)).slope == 0.0);

  CHECK_THROWS_AS(dimension_slope(one, RadiusGrid({Rat(1, 2), Rat(1, 4)})), ValidationError);
}

TEST_CASE("lipschitz levels") {
  MetricSpace circle = MetricSpace::circle_net(8);
  std::vector<int> rot{1, 2, 3, 4, 5, 6, 7, 0};
  CHECK(lipschitz_level(circle, Perm(rot)) == 0);
  CHECK(lipschitz_level(circle, Perm::identity(8)) == 0);

  // Swapping the endpoints' neighbors on the 0-1-2 path stretches d(0,1)
  // to d(0,2), a factor of two.
  CHECK(lipschitz_level(path3(), Perm({0, 2, 1})) == 1);

  // Zero distance mapped to a positive one has no finite level.
  std::vector<std::vector<Rat>> pseudo{{Rat(0), Rat(0), Rat(1)},
                                       {Rat(0), Rat(0), Rat(1)},
                                       {Rat(1), Rat(1), Rat(0)}};
  MetricSpace ps(3, std::move(pseudo));
  CHECK_THROWS_AS(lipschitz_level(ps, Perm({0, 2, 1})), ValidationError);
}

TEST_CASE("stable index") {
  std::vector<Rat> constant(5, Rat(7));
  CHECK(*stable_index(constant, 2, Rat(1, 10)) == 0);

  // a_n = n + 1 for n >= 1: the list is [2,3,4,...].
  std::vector<Rat> lin;
  for (int n = 1; n <= 10; ++n) lin.emplace_back(n + 1);
  CHECK(*stable_index(lin, 1, Rat(1, 2)) == 0);

  std::vector<Rat> expo;
  for (int n = 0; n < 12; ++n) expo.emplace_back(BigInt(1) << n);
  CHECK_FALSE(stable_index(expo, 1, Rat(1, 10)).has_value());

  CHECK_THROWS_AS(stable_index(std::vector<Rat>{Rat(1)}, 1, Rat(1)), ValidationError);
}

TEST_CASE("metric structures from radius grids") {
  MetricSpace circle = MetricSpace::circle_net(32);
  UniformStructure s = metric_structure(circle, RadiusGrid::quarter_chain(Rat(1), Rat(1, 64)));
  CHECK(s.bases().size() == 4);
  CHECK_THROWS_AS(metric_structure(circle, RadiusGrid({Rat(1), Rat(1, 2)})), ValidationError);
}

TEST_CASE("ball-covering stability replay on a small circle") {
  MetricSpace circle = MetricSpace::circle_net(64);
  std::vector<int> rot(64);
  for (int i = 0; i < 64; ++i) rot[i] = (i + 1) % 64;
  std::vector<Perm> gens{Perm(rot)};
  Covering u = ball_cover(circle, Rat(1, 4));
  Thm82Report rep = thm82_replay(circle, gens, u, Rat(1, 2), 10);
  CHECK(rep.l == 0);
  CHECK(rep.m == 2);
  CHECK(rep.success);
  CHECK(rep.cover_refines);
  CHECK(rep.nv_bound);
  CHECK(rep.max_ratio <= Rat(3, 2));

  // Too-short grid: inconclusive, not an error.
  Thm82Report shallow = thm82_replay(circle, gens, u, Rat(1, 2), 5);
  CHECK_FALSE(shallow.success);
  CHECK(shallow.failure_reason == "growth too fast at this truncation");
}

TEST_CASE("replay on a single point") {
  MetricSpace one(1, {{Rat(0)}});
  std::vector<Perm> gens{Perm::identity(1)};
  Thm82Report rep = thm82_replay(one, gens, ball_cover(one, Rat(1)), Rat(1, 2), 6);
  CHECK(rep.success);
  CHECK(rep.max_ratio == 1);
}

TEST_CASE("replay with identity generator on a cantor net") {
  MetricSpace cantor = MetricSpace::cantor_net(8);
  std::vector<Perm> gens{Perm::identity(256)};
  Thm82Report rep = thm82_replay(cantor, gens, ball_cover(cantor, Rat(1, 3)), Rat(1, 2), 16);
  CHECK(rep.success);
  CHECK(rep.max_ratio == 1);
  CHECK(rep.l == 0);
}
