#include "covlab/matching.hpp"

#include <algorithm>

#include "covlab/errors.hpp"
#include "covlab/uniformity.hpp"

namespace covlab {

BipartiteGraph::BipartiteGraph(int left, int right) : left_(left), right_(right), adj_(left) {
  if (left < 0 || right < 0) throw ValidationError("negative vertex count");
}

void BipartiteGraph::add_edge(int x, int y) {
  if (x < 0 || x >= left_ || y < 0 || y >= right_)
    throw ValidationError("edge endpoint out of range");
  auto& a = adj_[x];
  auto it = std::lower_bound(a.begin(), a.end(), y);
  if (it == a.end() || *it != y) a.insert(it, y);
}

bool BipartiteGraph::has_edge(int x, int y) const {
  const auto& a = adj_[x];
  return std::binary_search(a.begin(), a.end(), y);
}

Subset BipartiteGraph::neighborhood(const Subset& s) const {
  Subset out;
  for (int x = s.next(0); x >= 0; x = s.next(x + 1))
    for (int y : adj_[x]) out.add(y);
  return out;
}

namespace {

bool augment(const BipartiteGraph& b, int x, std::vector<int>& match_left,
             std::vector<int>& match_right, std::vector<int>& visited, int stamp) {
  visited[x] = stamp;
  for (int y : b.neighbors(x))
    if (match_right[y] < 0) {
      match_left[x] = y;
      match_right[y] = x;
      return true;
    }
  for (int y : b.neighbors(x)) {
    int z = match_right[y];
    if (visited[z] != stamp && augment(b, z, match_left, match_right, visited, stamp)) {
      match_left[x] = y;
      match_right[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

PartialMap max_matching(const BipartiteGraph& b) {
  std::vector<int> match_left(b.left_size(), -1), match_right(b.right_size(), -1);
  std::vector<int> visited(b.left_size(), -1);
  for (int x = 0; x < b.left_size(); ++x)
    if (match_left[x] < 0) augment(b, x, match_left, match_right, visited, x);
  PartialMap phi(b.left_size());
  for (int x = 0; x < b.left_size(); ++x)
    if (match_left[x] >= 0) phi.set(x, match_left[x]);
  COVLAB_CHECK(phi.injective(), "matching must be injective");
  return phi;
}

int matching_number(const BipartiteGraph& b) { return max_matching(b).size(); }

int deficiency_bound(const BipartiteGraph& b) {
  if (b.left_size() > kDeficiencyMaxLeft)
    throw GuardError("deficiency_bound guarded to |left| <= " +
                     std::to_string(kDeficiencyMaxLeft));
  if (b.right_size() > kMaxGround)
    throw GuardError("deficiency_bound needs |right| within subset width");
  std::vector<Subset> nbr(b.left_size());
  for (int x = 0; x < b.left_size(); ++x)
    for (int y : b.neighbors(x)) nbr[x].add(y);
  int worst = 0;  // S = empty set attains 0
  for (std::uint64_t s = 1; s < (1ull << b.left_size()); ++s) {
    Subset reach;
    int size = 0;
    for (int x = 0; x < b.left_size(); ++x)
      if ((s >> x) & 1) {
        reach |= nbr[x];
        ++size;
      }
    worst = std::max(worst, size - reach.count());
  }
  return b.left_size() - worst;
}

bool has_perfect_matching(const BipartiteGraph& b) {
  return matching_number(b) == b.left_size();
}

CoveringGraph covering_graph(const Subset& e, const Subset& f, const Covering& u) {
  if (!e.subset_of(u.ground().all()) || !f.subset_of(u.ground().all()))
    throw ValidationError("vertex sets outside the covering's ground set");
  CoveringGraph cg{e.elements(), f.elements(),
                   BipartiteGraph(e.count(), f.count())};
  for (std::size_t i = 0; i < cg.left_elems.size(); ++i)
    for (std::size_t j = 0; j < cg.right_elems.size(); ++j) {
      Subset pair = Subset::single(cg.left_elems[i]) | Subset::single(cg.right_elems[j]);
      for (const auto& m : u.members())
        if (pair.subset_of(m)) {
          cg.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
          break;
        }
    }
  return cg;
}

int mu(const Subset& e, const Subset& f, const Covering& u) {
  return matching_number(covering_graph(e, f, u).graph);
}

PartialMap covering_matching(const Subset& e, const Subset& f, const Covering& u) {
  CoveringGraph cg = covering_graph(e, f, u);
  PartialMap idx = max_matching(cg.graph);
  PartialMap out(u.ground_size());
  for (std::size_t i = 0; i < cg.left_elems.size(); ++i)
    if (idx.defined(static_cast<int>(i)))
      out.set(cg.left_elems[i], cg.right_elems[idx.image(static_cast<int>(i))]);
  return out;
}

std::vector<PartialMap> transfer_matching(const Covering& u, std::span<const Perm> e_maps,
                                          const Subset& f0, const Subset& f1,
                                          const PartialMap& phi) {
  // phi must be a bijection f1 -> f0.
  if (phi.universe() != u.ground_size())
    throw ValidationError("phi universe must be the ground set");
  Subset dom = phi.domain_set(), image;
  for (int x = dom.next(0); x >= 0; x = dom.next(x + 1)) image.add(phi.image(x));
  if (dom != f1 || image != f0 || !phi.injective())
    throw ValidationError("phi must be a bijection from f1 onto f0");

  // Hypothesis over the raw meet of u with every g^{-1}(u).
  std::vector<Subset> meet_members(u.members().begin(), u.members().end());
  for (const auto& g : e_maps) {
    Perm ginv = g.inverse();
    for (const auto& m : u.members()) meet_members.push_back(ginv.apply(m));
  }
  for (int x = f1.next(0); x >= 0; x = f1.next(x + 1))
    for (const auto& m : meet_members)
      if (m.contains(phi.image(x)) && !m.contains(x))
        throw ValidationError("phi hypothesis violated at point " + std::to_string(x) +
                              " and member " + m.to_string());

  PartialMap phi_inv(u.ground_size());
  for (int x = f1.next(0); x >= 0; x = f1.next(x + 1)) phi_inv.set(phi.image(x), x);

  std::vector<PartialMap> out;
  for (const auto& g : e_maps) {
    Perm ginv = g.inverse();
    PartialMap psi0 = covering_matching(f0, g.apply(f0), u);
    PartialMap psi1(u.ground_size());
    for (int x = f1.next(0); x >= 0; x = f1.next(x + 1)) {
      int x0 = phi.image(x);
      if (!psi0.defined(x0)) continue;
      psi1.set(x, g(phi_inv.image(ginv(psi0.image(x0)))));
    }
    COVLAB_CHECK(psi1.injective(), "transferred matching must be injective");
    COVLAB_CHECK(psi1.size() == psi0.size(), "transfer must preserve the domain size");
    CoveringGraph target = covering_graph(f1, g.apply(f1), u);
    for (int x = 0; x < psi1.universe(); ++x)
      if (psi1.defined(x)) {
        auto lx = std::lower_bound(target.left_elems.begin(), target.left_elems.end(), x);
        auto ry = std::lower_bound(target.right_elems.begin(), target.right_elems.end(),
                                   psi1.image(x));
        COVLAB_CHECK(lx != target.left_elems.end() && *lx == x && ry != target.right_elems.end() &&
                         *ry == psi1.image(x) &&
                         target.graph.has_edge(
                             static_cast<int>(lx - target.left_elems.begin()),
                             static_cast<int>(ry - target.right_elems.begin())),
                     "transferred pair must be an edge of the target covering graph");
      }
    out.push_back(std::move(psi1));
  }
  return out;
}

PartialMap compatible_matching(const Covering& u, const Subset& e, const Subset& f, int n) {
  if (n < 1) throw ValidationError("compatible matching needs n >= 1");
  PartialMap phi0 = covering_matching(e, f, u);
  Subset d0 = phi0.domain_set();

  PartialMap phi1(u.ground_size());
  for (int x = d0.next(0); x >= 0; x = d0.next(x + 1)) {
    if (f.contains(x)) continue;
    int nu = 0;
    for (int m = 1; m <= n + 1; ++m)
      if (phi0.iterate(x, m).has_value()) nu = m;
    if (nu > n) continue;
    int exit_point = *phi0.iterate(x, nu);
    if (e.contains(exit_point)) continue;
    phi1.set(x, exit_point);
  }

  COVLAB_CHECK(phi1.injective(), "compatible matching must be injective");
  Covering starred = star_power(u, n - 1);
  Subset e_only = e - f, f_only = f - e;
  CoveringGraph target = covering_graph(e_only, f_only, starred);
  for (int x = 0; x < phi1.universe(); ++x)
    if (phi1.defined(x)) {
      COVLAB_CHECK(e_only.contains(x) && f_only.contains(phi1.image(x)),
                   "compatible matching endpoints must lie in E \\ F and F \\ E");
      auto lx = std::lower_bound(target.left_elems.begin(), target.left_elems.end(), x);
      auto ry = std::lower_bound(target.right_elems.begin(), target.right_elems.end(),
                                 phi1.image(x));
      COVLAB_CHECK(target.graph.has_edge(static_cast<int>(lx - target.left_elems.begin()),
                                         static_cast<int>(ry - target.right_elems.begin())),
                   "compatible matching pair must share a star-power member");
    }
  // |dom phi1| >= mu(E,F,U) - (1 + 1/n)|E cap F|, checked exactly:
  // n |dom phi1| >= n mu - (n+1)|E cap F|.
  int cap = (e & f).count();
  COVLAB_CHECK(static_cast<long long>(n) * phi1.size() >=
                   static_cast<long long>(n) * phi0.size() -
                       static_cast<long long>(n + 1) * cap,
               "compatible matching cardinality bound");
  return phi1;
}

PartialMap refinement_injection(const Covering& u, const Covering& v, const Covering& w,
                                const UniformStructure& s) {
  if (!is_admissible(u, s) || !is_admissible(v, s) || !is_admissible(w, s))
    throw ValidationError("refinement injection needs admissible coverings");
  if (!refines(u, v)) throw ValidationError("v must refine u");
  if (!refines(u, w)) throw ValidationError("w must refine u");
  Covering cv = v.canonicalized(), cw = w.canonicalized();
  int n = complexity(u, s);
  if (n != cv.size())
    throw ValidationError("refinement injection requires complexity(u) = |canonical(v)| (" +
                          std::to_string(n) + " != " + std::to_string(cv.size()) + ")");

  BipartiteGraph b(cv.size(), cw.size());
  for (int i = 0; i < cv.size(); ++i)
    for (int j = 0; j < cw.size(); ++j)
      if (cv.members()[i].intersects(cw.members()[j])) b.add_edge(i, j);
  PartialMap phi = max_matching(b);
  COVLAB_CHECK(phi.size() == cv.size(), "refinement injection must be perfect");
  return phi;
}

}  // namespace covlab
