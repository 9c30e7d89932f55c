#include "covlab/metric.hpp"

#include <algorithm>
#include <cmath>

#include "covlab/dynamics.hpp"
#include "covlab/errors.hpp"
#include "covlab/set_cover.hpp"

namespace covlab {

MetricSpace::MetricSpace(int size, std::vector<std::vector<Rat>> dist)
    : size_(size), dist_(std::move(dist)) {
  if (size < 1) throw ValidationError("metric space must be non-empty");
  if (size > Limits::ground_limit())
    throw GuardError("metric space size " + std::to_string(size) + " exceeds limit " +
                     std::to_string(Limits::ground_limit()) +
                     " (raise via COVLAB_GUARD_GROUND)");
  if (static_cast<int>(dist_.size()) != size)
    throw ValidationError("distance table must be size x size");
  for (const auto& row : dist_)
    if (static_cast<int>(row.size()) != size)
      throw ValidationError("distance table must be size x size");
  for (int i = 0; i < size; ++i) {
    if (dist_[i][i] != 0) throw ValidationError("nonzero diagonal distance");
    for (int j = 0; j < size; ++j) {
      if (dist_[i][j] < 0) throw ValidationError("negative distance");
      if (dist_[i][j] != dist_[j][i]) throw ValidationError("asymmetric distance table");
    }
  }
  // Triangle inequality on a common integer scale.
  BigInt common(1);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      common = boost::multiprecision::lcm(common, denominator(dist_[i][j]));
  std::vector<std::vector<BigInt>> scaled(size, std::vector<BigInt>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      scaled[i][j] = numerator(dist_[i][j]) * (common / denominator(dist_[i][j]));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (scaled[i][j] > scaled[i][k] + scaled[k][j])
          throw ValidationError("triangle inequality violated at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
}

Rat MetricSpace::diameter() const {
  Rat d(0);
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j) d = std::max(d, dist_[i][j]);
  return d;
}

Rat MetricSpace::min_positive_distance() const {
  Rat d(0);
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (dist_[i][j] > 0 && (d == 0 || dist_[i][j] < d)) d = dist_[i][j];
  return d;
}

MetricSpace MetricSpace::circle_net(int n, const Rat& circumference) {
  if (n < 1) throw ValidationError("circle net needs at least one point");
  if (circumference <= 0) throw ValidationError("circumference must be positive");
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int steps = std::min(std::abs(i - j), n - std::abs(i - j));
      d[i][j] = circumference * steps / n;
    }
  return MetricSpace(n, std::move(d));
}

MetricSpace MetricSpace::cantor_net(int level) {
  if (level < 1 || level > 8) throw ValidationError("cantor net level must be in 1..8");
  const int n = 1 << level;
  // Midpoint of the interval addressed by the digit word w in {0,2}^level.
  std::vector<Rat> pos(n);
  BigInt pow3(1);
  for (int i = 0; i < level; ++i) pow3 *= 3;
  for (int w = 0; w < n; ++w) {
    Rat p(1, 2 * pow3);
    BigInt denom(1);
    for (int i = 0; i < level; ++i) {
      denom *= 3;
      if ((w >> (level - 1 - i)) & 1) p += Rat(2, denom);
    }
    pos[w] = p;
  }
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = boost::multiprecision::abs(pos[i] - pos[j]);
  return MetricSpace(n, std::move(d));
}

RadiusGrid::RadiusGrid(std::vector<Rat> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw ValidationError("radius grid must be non-empty");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (radii_[i] <= 0) throw ValidationError("radii must be positive");
    if (i && radii_[i] >= radii_[i - 1])
      throw ValidationError("radii must be strictly decreasing");
  }
}

RadiusGrid RadiusGrid::quarter_chain(const Rat& r0, const Rat& floor_value) {
  if (r0 <= 0 || floor_value <= 0) throw ValidationError("radii must be positive");
  std::vector<Rat> rs{r0};
  while (rs.back() > floor_value) rs.push_back(rs.back() / 4);
  return RadiusGrid(std::move(rs));
}

Covering ball_cover(const MetricSpace& m, const Rat& r) {
  if (r <= 0) throw ValidationError("ball radius must be positive");
  GroundSet ground(m.size());
  std::vector<Subset> balls(m.size());
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y)
      if (m.dist(x, y) < r) balls[x].add(y);
  return Covering(ground, std::move(balls));
}

GammaWitness gamma_with_centers(const MetricSpace& m, const Rat& r) {
  if (r <= 0) throw ValidationError("ball radius must be positive");
  std::vector<Subset> balls(m.size());
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y)
      if (m.dist(x, y) < r) balls[x].add(y);
  auto sol = min_set_cover(m.size(), balls);
  COVLAB_CHECK(sol.has_value(), "every point lies in its own ball");
  return GammaWitness{sol->size, std::move(sol->chosen)};
}

int gamma(const MetricSpace& m, const Rat& r) { return gamma_with_centers(m, r).value; }

UniformStructure metric_structure(const MetricSpace& m, const RadiusGrid& grid) {
  const auto& rs = grid.radii();
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (rs[i] * 4 > rs[i - 1])
      throw ValidationError("structure radii must shrink by a factor of at least 4");
  std::vector<Covering> bases;
  for (const auto& r : rs) bases.push_back(ball_cover(m, r));
  return UniformStructure(GroundSet(m.size()), std::move(bases));
}

SlopeReport dimension_slope(const MetricSpace& m, const RadiusGrid& grid) {
  const auto& rs = grid.radii();
  if (rs.size() < 3) throw ValidationError("dimension slope needs at least 3 radii");
  for (const auto& r : rs)
    if (r >= 1) throw ValidationError("dimension slope radii must be below 1");
  SlopeReport rep;
  std::vector<double> xs, ys;
  for (const auto& r : rs) {
    int g = gamma(m, r);
    rep.gammas.push_back(g);
    double x = -std::log2(r.convert_to<double>());
    double y = std::log2(static_cast<double>(g));
    xs.push_back(x);
    ys.push_back(y);
    rep.point_ratios.push_back(y / x);
  }
  double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw ValidationError("degenerate grid: zero variance in log radii");
  rep.slope = (n * sxy - sx * sy) / denom;
  return rep;
}

int lipschitz_level(const MetricSpace& m, const Perm& g) {
  if (g.degree() != m.size()) throw ValidationError("permutation degree differs from the space");
  Perm ginv = g.inverse();
  Rat worst(0);
  for (int x = 0; x < m.size(); ++x)
    for (int y = x + 1; y < m.size(); ++y) {
      const Rat& d = m.dist(x, y);
      for (const Rat& image : {m.dist(g(x), g(y)), m.dist(ginv(x), ginv(y))}) {
        if (d == 0) {
          if (image != 0)
            throw ValidationError("no finite Lipschitz level: zero distance mapped to positive");
        } else {
          worst = std::max(worst, Rat(image / d));
        }
      }
    }
  int l = 0;
  Rat pow(1);
  while (pow < worst) {
    pow *= 2;
    ++l;
  }
  return l;
}

std::optional<int> stable_index(std::span<const Rat> a, int k, const Rat& eps) {
  if (static_cast<int>(a.size()) <= k)
    throw ValidationError("stable index needs a list longer than k");
  if (eps <= 0) throw ValidationError("eps must be positive");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw ValidationError("list entries must be at least 1");
    if (i && a[i] < a[i - 1]) throw ValidationError("list must be nondecreasing");
  }
  for (std::size_t i = 0; i + k < a.size(); ++i)
    if (a[i + k] <= (1 + eps) * a[i]) return static_cast<int>(i);
  return std::nullopt;
}

Thm82Report thm82_replay(const MetricSpace& m, std::span<const Perm> gens, const Covering& u,
                         const Rat& eps, int grid_depth) {
  if (eps <= 0) throw ValidationError("eps must be positive");
  if (u.ground_size() != m.size())
    throw ValidationError("covering ground differs from the metric space");
  Thm82Report rep;

  rep.l = 0;
  for (const auto& g : gens) rep.l = std::max(rep.l, lipschitz_level(m, g));
  rep.k = rep.l + 2;

  // Least dyadic level whose ball cover refines u.
  Rat r(1);
  int mm = -1;
  for (int j = 0; j <= grid_depth; ++j, r /= 2)
    if (refines(u, ball_cover(m, r))) {
      mm = j;
      break;
    }
  if (mm < 0) {
    rep.failure_reason = "no dyadic ball cover within the grid refines u";
    return rep;
  }
  rep.m = mm;

  std::vector<Rat> gammas;
  for (int j = 0; j <= grid_depth; ++j) {
    rep.gamma_trace.push_back(gamma(m, Rat(1, BigInt(1) << j)));
    gammas.push_back(Rat(rep.gamma_trace.back()));
  }
  if (rep.m + rep.k >= static_cast<int>(gammas.size())) {
    rep.failure_reason = "grid too short for the stability search";
    return rep;
  }
  auto idx = stable_index(std::span<const Rat>(gammas).subspan(rep.m), rep.k, eps);
  if (!idx) {
    rep.failure_reason = "growth too fast at this truncation";
    return rep;
  }
  rep.n = rep.m + *idx;

  const Rat r_n(1, BigInt(1) << rep.n);
  const Rat r_fine(1, BigInt(1) << (rep.n + rep.l + 2));
  auto net = gamma_with_centers(m, r_fine);
  rep.net = net.centers;

  std::vector<Subset> v_members;
  for (int x : rep.net) {
    Subset ball;
    for (int y = 0; y < m.size(); ++y)
      if (m.dist(x, y) < r_n) ball.add(y);
    v_members.push_back(ball);
  }
  Covering v(GroundSet(m.size()), std::move(v_members));
  rep.cover_refines = refines(u, v);

  // Chain fine enough to make V and the comparison cover admissible.
  Rat r0 = 1;
  while (r0 < m.diameter()) r0 *= 4;
  UniformStructure s = metric_structure(m, RadiusGrid::quarter_chain(r0, r_fine / 4));
  rep.n_v = complexity(v, s);
  rep.nv_bound = rep.n_v >= rep.gamma_trace[rep.n];

  Rat worst(1);
  for (const auto& g : gens) {
    int njoin = complexity(join(v, image_cover(g, v)), s);
    COVLAB_CHECK(njoin <= net.value, "join complexity bounded by the fine net size");
    Rat ratio(njoin, rep.n_v);
    rep.ratios.push_back(ratio);
    worst = std::max(worst, ratio);
  }
  rep.max_ratio = worst;
  rep.ratio_bound = worst <= 1 + eps;
  rep.success = rep.cover_refines && rep.nv_bound && rep.ratio_bound;
  if (!rep.success && rep.failure_reason.empty())
    rep.failure_reason = "replay assertions failed";
  return rep;
}

}  // namespace covlab
