#include "covlab/covering.hpp"

#include <algorithm>

#include "covlab/errors.hpp"
#include "covlab/limits.hpp"
#include "covlab/uniformity.hpp"

namespace covlab {

GroundSet::GroundSet(int size) : size_(size) {
  if (size < 1) throw ValidationError("ground set must be non-empty");
  if (size > Limits::ground_limit())
    throw GuardError("ground size " + std::to_string(size) + " exceeds limit " +
                     std::to_string(Limits::ground_limit()) +
                     " (raise via COVLAB_GUARD_GROUND)");
}

namespace {

std::vector<Subset> canonical_members(std::vector<Subset> ms) {
  std::erase_if(ms, [](const Subset& s) { return s.empty(); });
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Subset> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < ms.size() && maximal; ++j)
      if (i != j && ms[i].subset_of(ms[j])) maximal = false;
    if (maximal) out.push_back(ms[i]);
  }
  return out;
}

}  // namespace

Covering::Covering(GroundSet ground, std::vector<Subset> members, bool canonicalize)
    : ground_(ground), members_(std::move(members)), canonical_(canonicalize) {
  Subset u;
  for (const auto& m : members_) u |= m;
  if (u != ground_.all())
    throw ValidationError("member union does not cover the ground set");
  if (canonicalize) members_ = canonical_members(std::move(members_));
}

Covering Covering::canonicalized() const {
  if (canonical_) return *this;
  return Covering(ground_, members_, true);
}

std::string Covering::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += members_[i].to_string();
  }
  return out + "}";
}

namespace {

void require_same_ground(const Covering& a, const Covering& b) {
  if (a.ground_size() != b.ground_size())
    throw ValidationError("coverings live on different ground sets");
}

}  // namespace

bool refines(const Covering& coarse, const Covering& fine) {
  require_same_ground(coarse, fine);
  for (const auto& v : fine.members()) {
    bool inside = false;
    for (const auto& u : coarse.members())
      if (v.subset_of(u)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

bool same_class(const Covering& a, const Covering& b) {
  return refines(a, b) && refines(b, a);
}

Covering join(std::span<const Covering> coverings) {
  if (coverings.empty()) throw ValidationError("join of an empty list");
  for (std::size_t i = 1; i < coverings.size(); ++i)
    require_same_ground(coverings[0], coverings[i]);
  std::vector<Subset> cells(coverings[0].members().begin(), coverings[0].members().end());
  for (std::size_t i = 1; i < coverings.size(); ++i) {
    std::vector<Subset> next;
    for (const auto& c : cells)
      for (const auto& m : coverings[i].members()) {
        Subset cell = c & m;
        if (!cell.empty()) next.push_back(cell);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cells = std::move(next);
  }
  return Covering(coverings[0].ground(), std::move(cells));
}

Covering join(const Covering& a, const Covering& b) {
  const Covering args[] = {a, b};
  return join(args);
}

Covering meet(std::span<const Covering> coverings) {
  if (coverings.empty()) throw ValidationError("meet of an empty list");
  std::vector<Subset> ms;
  for (const auto& c : coverings) {
    require_same_ground(coverings[0], c);
    ms.insert(ms.end(), c.members().begin(), c.members().end());
  }
  return Covering(coverings[0].ground(), std::move(ms));
}

Covering meet(const Covering& a, const Covering& b) {
  const Covering args[] = {a, b};
  return meet(args);
}

Subset star_of_set(const Subset& s, const Covering& cover) {
  Subset out;
  for (const auto& m : cover.members())
    if (m.intersects(s)) out |= m;
  return out;
}

Subset star_of_point(int x, const Covering& cover) {
  return star_of_set(Subset::single(x), cover);
}

Covering star_power(const Covering& cover, int n) {
  if (n < 0) throw ValidationError("negative star power");
  Covering cur = cover;
  for (int i = 0; i < n; ++i) {
    std::vector<Subset> stars;
    stars.reserve(cur.members().size());
    for (const auto& m : cur.members()) stars.push_back(star_of_set(m, cur));
    cur = Covering::raw(cur.ground(), std::move(stars));
  }
  return cur;
}

bool is_star_refinement(const Covering& coarse, const Covering& fine) {
  return refines(coarse, star_power(fine, 1));
}

Covering excise_with_stars(const Covering& u, const Covering& v, const Subset& s) {
  require_same_ground(u, v);
  std::vector<Subset> ms;
  for (const auto& m : u.members()) ms.push_back(m - s);
  for (int x = s.next(0); x >= 0; x = s.next(x + 1)) ms.push_back(star_of_point(x, v));
  return Covering(u.ground(), std::move(ms));
}

Covering excise_finite(const Covering& u, std::span<const Subset> v_patch, const Subset& f) {
  Subset patch_union;
  for (const auto& p : v_patch) patch_union |= p;
  if (!f.subset_of(patch_union))
    throw ValidationError("excised set not covered by the patch");
  std::vector<Subset> ms;
  for (const auto& m : u.members()) ms.push_back(m - f);
  ms.insert(ms.end(), v_patch.begin(), v_patch.end());
  return Covering(u.ground(), std::move(ms));
}

PartialMap point_projection(const Covering& u, const Covering& v,
                            const UniformStructure& structure) {
  Covering cu = u.canonicalized();
  int n = complexity(u, structure);
  if (n != cu.size())
    throw ValidationError("point projection requires complexity(u) = |canonical(u)| (" +
                          std::to_string(n) + " != " + std::to_string(cu.size()) + ")");
  if (!is_admissible(v, structure))
    throw ValidationError("point projection requires an admissible v");
  if (!is_star_refinement(u, v))
    throw ValidationError("point projection requires u star-refined by v");

  PartialMap pi(cu.size());
  for (int i = 0; i < cu.size(); ++i) {
    const Subset& member = cu.members()[i];
    int witness = -1;
    for (int x = member.next(0); x >= 0 && witness < 0; x = member.next(x + 1)) {
      Subset st = star_of_point(x, v);
      if (!st.subset_of(member)) continue;
      bool inside_other = false;
      for (int j = 0; j < cu.size() && !inside_other; ++j)
        if (j != i && st.subset_of(cu.members()[j])) inside_other = true;
      if (!inside_other) witness = x;
    }
    COVLAB_CHECK(witness >= 0, "point projection witness must exist");
    pi.set(i, witness);
  }
  COVLAB_CHECK(pi.injective(), "point projection must be injective");
  return pi;
}

}  // namespace covlab
