#include "covlab/gen.hpp"

#include <algorithm>

#include "covlab/errors.hpp"

namespace covlab::gen {

Subset random_subset(Rng& rng, int ground, bool nonempty) {
  Subset s;
  for (int i = 0; i < ground; ++i)
    if (rng.percent(40)) s.add(i);
  if (nonempty && s.empty()) s.add(rng.below(ground));
  return s;
}

Covering random_covering(Rng& rng, const GroundSet& ground) {
  const int n = ground.size();
  std::vector<Subset> ms;
  const int count = 1 + rng.below(std::min(n + 2, 7));
  for (int i = 0; i < count; ++i) ms.push_back(random_subset(rng, n, true));
  Subset covered;
  for (const auto& m : ms) covered |= m;
  for (int x = 0; x < n; ++x)
    if (!covered.contains(x)) {
      if (rng.percent(50))
        ms.push_back(Subset::single(x));
      else
        ms[rng.below(static_cast<int>(ms.size()))].add(x);
    }
  return Covering(ground, std::move(ms));
}

Partition random_partition(Rng& rng, const GroundSet& ground) {
  const int n = ground.size();
  const int blocks = 1 + rng.below(n);
  std::vector<Subset> bs(blocks);
  for (int x = 0; x < n; ++x) bs[rng.below(blocks)].add(x);
  std::erase_if(bs, [](const Subset& b) { return b.empty(); });
  return Partition(ground, std::move(bs));
}

UniformStructure random_chain(Rng& rng, int ground) {
  GroundSet g(ground);
  switch (rng.below(4)) {
    case 0: {  // single base
      return UniformStructure(g, {random_covering(rng, g)});
    }
    case 1: {  // trivial covering over a partition
      Partition p = random_partition(rng, g);
      Covering fine(g, p.blocks());
      std::vector<Covering> bases;
      if (rng.percent(60)) bases.push_back(Covering(g, {g.all()}));
      bases.push_back(std::move(fine));
      return UniformStructure(g, std::move(bases));
    }
    case 2: {  // star of a random covering, then the covering
      Covering c = random_covering(rng, g);
      return UniformStructure(g, {star_power(c, 1).canonicalized(), c});
    }
    default: {  // three-level star chain
      Covering c = random_covering(rng, g);
      return UniformStructure(
          g, {star_power(c, 2).canonicalized(), star_power(c, 1).canonicalized(), c});
    }
  }
}

Covering random_admissible(Rng& rng, const UniformStructure& s) {
  const Covering& fine = s.finest();
  const int k = fine.size();
  const int groups = 1 + rng.below(std::max(1, k));
  std::vector<Subset> ms(groups);
  for (int i = 0; i < k; ++i) ms[rng.below(groups)] |= fine.members()[i];
  std::erase_if(ms, [](const Subset& m) { return m.empty(); });
  // Extra members exercise the reduction: they may cover no base member.
  const int extras = rng.below(3);
  for (int i = 0; i < extras; ++i)
    ms.push_back(random_subset(rng, s.ground().size(), true));
  return Covering(s.ground(), std::move(ms));
}

Perm random_perm(Rng& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng.below(i + 1)]);
  return Perm(std::move(img));
}

namespace {

bool preserves(const UniformStructure& s, const Perm& g) {
  Perm ginv = g.inverse();
  for (const auto& base : s.bases())
    if (!is_admissible(image_cover(g, base), s) || !is_admissible(image_cover(ginv, base), s))
      return false;
  return true;
}

}  // namespace

std::vector<Perm> random_automorphisms(Rng& rng, const UniformStructure& s, int count) {
  const int n = s.ground().size();
  std::vector<Perm> out;
  for (int i = 0; i < count; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < 30 && !found; ++attempt) {
      Perm p = random_perm(rng, n);
      if (preserves(s, p)) {
        out.push_back(std::move(p));
        found = true;
      }
    }
    if (!found) out.push_back(Perm::identity(n));
  }
  return out;
}

BipartiteGraph random_bigraph(Rng& rng, int max_left, int max_right) {
  const int l = 1 + rng.below(max_left), r = 1 + rng.below(max_right);
  BipartiteGraph b(l, r);
  const int density = 10 + rng.below(80);
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < r; ++y)
      if (rng.percent(density)) b.add_edge(x, y);
  return b;
}

}  // namespace covlab::gen
