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

// Finite pseudo-metric space with exact rational distances, validated for
// symmetry, zero diagonal and the triangle inequality at construction.
class MetricSpace {
 public:
  MetricSpace(int size, std::vector<std::vector<Rat>> dist);

  int size() const { return size_; }
  const Rat& dist(int x, int y) const { return dist_[x][y]; }
  const std::vector<std::vector<Rat>>& table() const { return dist_; }
  Rat diameter() const;
  Rat min_positive_distance() const;  // zero when all distances vanish

  // n points with arc distance min(|i-j|, n-|i-j|) * circumference / n.
  static MetricSpace circle_net(int n, const Rat& circumference = Rat(2));
  // Midpoints of the 2^level middle-thirds intervals at depth `level`.
  static MetricSpace cantor_net(int level);

 private:
  int size_;
  std::vector<std::vector<Rat>> dist_;
};

// Strictly decreasing positive radii.
class RadiusGrid {
 public:
  explicit RadiusGrid(std::vector<Rat> radii);
  // r0, r0/4, ..., first value <= floor_value.
  static RadiusGrid quarter_chain(const Rat& r0, const Rat& floor_value);
  const std::vector<Rat>& radii() const { return radii_; }

 private:
  std::vector<Rat> radii_;
};

// Open balls {B(x, r) : x}, canonical.
Covering ball_cover(const MetricSpace& m, const Rat& r);

// Least number of radius-r balls centered in the space covering it.
int gamma(const MetricSpace& m, const Rat& r);

// Same, plus deterministic optimal centers.
struct GammaWitness {
  int value;
  std::vector<int> centers;
};
GammaWitness gamma_with_centers(const MetricSpace& m, const Rat& r);

// Ball coverings at the grid radii as a base chain; requires consecutive
// radius ratios <= 1/4 (star refinement then follows from the triangle
// inequality).
UniformStructure metric_structure(const MetricSpace& m, const RadiusGrid& grid);

struct SlopeReport {
  double slope = 0.0;
  std::vector<int> gammas;
  std::vector<double> point_ratios;  // log2 gamma / -log2 r per radius
};

// Least-squares slope of log2 gamma(r) against -log2 r over the grid. An
// estimator: the limit quantity is not computable from a finite grid.
SlopeReport dimension_slope(const MetricSpace& m, const RadiusGrid& grid);

// Least l with d(g(x), g(y)) <= 2^l d(x,y) and the same for g^{-1}; errors
// when g maps a zero distance to a positive one or conversely.
int lipschitz_level(const MetricSpace& m, const Perm& g);

// Least index i with a[i+k] <= (1+eps) a[i], for a nondecreasing list of
// rationals >= 1; nullopt when no index qualifies.
std::optional<int> stable_index(std::span<const Rat> a, int k, const Rat& eps);

struct Thm82Report {
  bool success = false;
  std::string failure_reason;
  int l = 0;          // max Lipschitz level over the generators
  int m = -1;         // least dyadic level with u refined by the ball cover
  int n = 0;          // stable level
  int k = 0;          // l + 2
  std::vector<int> gamma_trace;  // gamma(2^-j), j = 0..grid_depth
  std::vector<int> net;          // minimal (n+l+2)-net centers
  int n_v = 0;                   // N(V)
  std::vector<Rat> ratios;       // per generator: N(V join gV)/N(V)
  Rat max_ratio;
  bool cover_refines = false;    // u <= V
  bool nv_bound = false;         // N(V) >= gamma(2^-n)
  bool ratio_bound = false;      // max ratio <= 1 + eps
};

// Replays the ball-covering stability construction: find the Lipschitz
// level l, the starting level m, a level n >= m with
// gamma(2^-(n+l+2)) <= (1+eps) gamma(2^-n), then build V from a minimal
// (n+l+2)-net and certify u <= V, N(V) >= gamma(2^-n) and
// N(V join gV) <= gamma(2^-(n+l+2)) per generator. grid_depth bounds the
// dyadic levels examined; an exhausted grid is an inconclusive outcome,
// not an error.
Thm82Report thm82_replay(const MetricSpace& m, std::span<const Perm> gens, const Covering& u,
                         const Rat& eps, int grid_depth = 12);

}  // namespace covlab
