#include "covlab/dynamics.hpp"

#include <algorithm>
#include <map>

#include "covlab/errors.hpp"
#include "covlab/matching.hpp"

namespace covlab {

DynamicalInstance::DynamicalInstance(UniformStructure structure, std::vector<Perm> generators,
                                     int group_cap)
    : structure_(std::move(structure)), generators_(std::move(generators)) {
  const int n = structure_.ground().size();
  if (generators_.empty()) generators_.push_back(Perm::identity(n));
  for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
    const Perm& g = generators_[gi];
    if (g.degree() != n) throw ValidationError("generator degree differs from ground size");
    Perm ginv = g.inverse();
    for (std::size_t bi = 0; bi < structure_.bases().size(); ++bi) {
      const Covering& base = structure_.bases()[bi];
      if (!is_admissible(image_cover(g, base), structure_))
        throw ValidationError("generator " + std::to_string(gi) +
                              " is not an automorphism: image of base " + std::to_string(bi) +
                              " is inadmissible");
      if (!is_admissible(image_cover(ginv, base), structure_))
        throw ValidationError("generator " + std::to_string(gi) +
                              " is not an automorphism: inverse image of base " +
                              std::to_string(bi) + " is inadmissible");
    }
  }
  group_ = generate_group(generators_, group_cap);
}

Covering image_cover(const Perm& g, const Covering& u) {
  if (g.degree() != u.ground_size())
    throw ValidationError("permutation degree differs from the covering ground");
  std::vector<Subset> ms;
  ms.reserve(u.members().size());
  for (const auto& m : u.members()) ms.push_back(g.apply(m));
  return Covering(u.ground(), std::move(ms));
}

InvariantReport exact_mu(const DynamicalInstance& d) {
  const int n = d.ground_size();
  if (n > kExactMuMaxGround)
    throw GuardError("exact_mu guarded to ground <= " + std::to_string(kExactMuMaxGround));
  if (static_cast<int>(d.group().size()) > kExactMuMaxGroup)
    throw GuardError("exact_mu guarded to |group| <= " + std::to_string(kExactMuMaxGroup));

  Rat best(-1);
  Subset best_f;
  for (std::uint64_t fm = 1; fm < (1ull << n); ++fm) {
    Subset f;
    for (int i = 0; i < n; ++i)
      if ((fm >> i) & 1) f.add(i);
    Rat val = mu_lower_bound(d, f, d.group());
    if (val > best) {
      best = val;
      best_f = f;
    }
  }
  InvariantReport rep;
  rep.mu_value = best;
  rep.witness_f = best_f;
  rep.exact = true;
  return rep;
}

Rat mu_lower_bound(const DynamicalInstance& d, const Subset& f, std::span<const Perm> e) {
  if (f.empty()) throw ValidationError("mu witness set must be non-empty");
  if (e.empty()) throw ValidationError("mu witness needs at least one group element");
  const Covering& finest = d.structure().finest();
  int worst = f.count();
  for (const auto& g : e) worst = std::min(worst, mu(f, g.apply(f), finest));
  return Rat(worst, f.count());
}

std::vector<Covering> enumerate_admissible_canonical(const UniformStructure& s) {
  const int n = s.ground().size();
  if (n > kExactOmegaMaxGround)
    throw GuardError("covering enumeration guarded to ground <= " +
                     std::to_string(kExactOmegaMaxGround));
  const int subsets = (1 << n) - 1;
  std::vector<Subset> pool;
  for (int m = 1; m <= subsets; ++m) {
    Subset x;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) x.add(i);
    pool.push_back(x);
  }
  // Subset order is the member order of canonical coverings, so picking an
  // increasing antichain directly yields canonical member lists.
  std::sort(pool.begin(), pool.end());

  std::vector<Covering> out;
  std::vector<Subset> stack;
  auto emit = [&](const std::vector<Subset>& ms) {
    Subset all;
    for (const auto& m : ms) all |= m;
    if (all != s.ground().all()) return;
    Covering c = Covering::raw(s.ground(), ms);
    if (is_admissible(c, s)) out.push_back(Covering(s.ground(), ms));
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!stack.empty()) emit(stack);
    for (std::size_t i = from; i < pool.size(); ++i) {
      bool anti = true;
      for (const auto& m : stack)
        if (m.subset_of(pool[i]) || pool[i].subset_of(m)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      stack.push_back(pool[i]);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Memoizes N by canonical member list; complexity is a refinement-class
// function, so canonical keys lose nothing.
class NCache {
 public:
  explicit NCache(const UniformStructure& s) : s_(s) {}
  int operator()(const Covering& c) {
    Covering cc = c.canonicalized();
    auto it = cache_.find(cc.members());
    if (it != cache_.end()) return it->second;
    int v = complexity(cc, s_);
    cache_.emplace(cc.members(), v);
    return v;
  }

 private:
  const UniformStructure& s_;
  std::map<std::vector<Subset>, int> cache_;
};

}  // namespace

InvariantReport exact_omega(const DynamicalInstance& d) {
  const int n = d.ground_size();
  if (n > kExactOmegaMaxGround)
    throw GuardError("exact_omega guarded to ground <= " + std::to_string(kExactOmegaMaxGround));

  std::vector<Covering> coverings = enumerate_admissible_canonical(d.structure());
  NCache ncache(d.structure());

  // Growth ratio of each covering, independent of the outer quantifier.
  std::vector<Rat> ratio(coverings.size());
  for (std::size_t vi = 0; vi < coverings.size(); ++vi) {
    const Covering& v = coverings[vi];
    int nv = ncache(v);
    Rat worst(1);
    for (const auto& g : d.group()) {
      int njoin = ncache(join(v, image_cover(g, v)));
      COVLAB_CHECK(njoin >= nv, "join complexity cannot drop below N(V)");
      worst = std::max(worst, Rat(njoin, nv));
    }
    ratio[vi] = worst;
  }

  Rat best(0);
  std::optional<std::size_t> best_v;
  for (std::size_t ui = 0; ui < coverings.size(); ++ui) {
    Rat inner(-1);
    std::size_t inner_v = 0;
    for (std::size_t vi = 0; vi < coverings.size(); ++vi) {
      if (!refines(coverings[ui], coverings[vi])) continue;
      if (inner < 0 || ratio[vi] < inner) {
        inner = ratio[vi];
        inner_v = vi;
      }
    }
    COVLAB_CHECK(inner >= 0, "every covering refines itself");
    if (inner > best) {
      best = inner;
      best_v = inner_v;
    }
  }

  InvariantReport rep;
  rep.omega_lower = best;
  rep.omega_upper = best;
  rep.witness_v = coverings[*best_v];
  rep.exact = true;
  return rep;
}

OmegaSearchResult omega_upper_search(const DynamicalInstance& d, std::span<const Perm> e,
                                     const Covering& u, std::span<const Covering> candidates) {
  if (candidates.empty()) throw ValidationError("omega search needs candidates");
  NCache ncache(d.structure());
  std::optional<std::size_t> best;
  std::vector<Rat> ratios;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Covering& v = candidates[i];
    if (!is_admissible(v, d.structure()))
      throw ValidationError("candidate " + std::to_string(i) + " is inadmissible");
    if (!refines(u, v))
      throw ValidationError("candidate " + std::to_string(i) + " does not refine u");
    int nv = ncache(v);
    Rat worst(1);
    for (const auto& g : e)
      worst = std::max(worst, Rat(ncache(join(v, image_cover(g, v))), nv));
    ratios.push_back(worst);
    if (!best || worst < ratios[*best]) best = i;
  }
  return OmegaSearchResult{ratios[*best], candidates[*best], std::move(ratios)};
}

Covering excised_candidate(const DynamicalInstance& d, const Covering& u1, const Subset& f,
                           int star_depth) {
  if (star_depth != 1 && star_depth != 2)
    throw ValidationError("star depth must be 1 or 2");
  if (f.empty()) throw ValidationError("excision set must be non-empty");
  if (!is_admissible(u1, d.structure()))
    throw ValidationError("excised candidate needs an admissible u1");

  Covering star_source = star_power(u1, star_depth - 1);
  std::vector<Subset> ms;
  for (const auto& m : u1.members()) ms.push_back(m - f);
  for (int x = f.next(0); x >= 0; x = f.next(x + 1)) {
    Subset fx = f;
    fx.remove(x);
    ms.push_back(star_of_point(x, star_source) - fx);
  }
  Covering v(u1.ground(), std::move(ms));
  if (!is_admissible(v, d.structure()))
    throw ValidationError(
        "excised candidate inadmissible: some finest-base member holds two points of f");
  int nv = complexity(v, d.structure());
  COVLAB_CHECK(nv >= f.count(), "excised candidate must have N(V) >= |f|");
  return v;
}

Rat free_product_ratio(const DynamicalInstance& d, std::span<const Perm> e, const Covering& v) {
  if (e.empty()) throw ValidationError("free product ratio needs group elements");
  if (!is_admissible(v, d.structure()))
    throw ValidationError("free product ratio needs an admissible covering");
  std::vector<Covering> images;
  for (const auto& g : e) images.push_back(image_cover(g, v));
  int njoin = complexity(join(images), d.structure());
  int nv = complexity(v, d.structure());
  Rat r(njoin, nv);
  COVLAB_CHECK(r >= 1, "free product ratio is at least one");
  return r;
}

bool is_topologically_free(const DynamicalInstance& d, std::span<const Perm> e) {
  for (const auto& g : e) {
    if (g.is_identity()) continue;
    for (int x = 0; x < d.ground_size(); ++x)
      if (g(x) == x) return false;
  }
  return true;
}

InequalityReport check_inequalities(const DynamicalInstance& d) {
  InequalityReport rep;
  rep.mu = exact_mu(d);
  rep.omega = exact_omega(d);
  const Rat& omega = *rep.omega.omega_lower;
  const Rat& mu_v = *rep.mu.mu_value;
  rep.omega_in_range = omega >= 1 && omega <= 2;
  rep.first_main_holds = omega >= 2 - mu_v;
  COVLAB_CHECK(rep.omega_in_range, "omega must lie in [1,2]");
  COVLAB_CHECK(rep.first_main_holds, "omega >= 2 - mu must hold");
  rep.verdict = omega == 1 ? "amenability indicator: omega = 1"
                           : "omega > 1: no amenability verdict at this scale";
  rep.caveat =
      "equality omega = 2 - mu holds only for perfect Hausdorff models; "
      "finite instances certify the inequality only";
  return rep;
}

}  // namespace covlab
