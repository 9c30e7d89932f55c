#include "covlab/perm.hpp"

#include <algorithm>
#include <set>

#include "covlab/errors.hpp"

namespace covlab {

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw ValidationError("permutation image is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

Perm Perm::after(const Perm& other) const {
  if (degree() != other.degree()) throw ValidationError("composing permutations of different degree");
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[i] = img_[other.img_[i]];
  return Perm(std::move(img));
}

Subset Perm::apply(const Subset& s) const {
  Subset out;
  for (int e = s.next(0); e >= 0; e = s.next(e + 1)) out.add(img_[e]);
  return out;
}

std::string Perm::to_string() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(img_[i]);
  }
  return out + "]";
}

std::vector<Perm> generate_group(std::span<const Perm> generators, int cap) {
  if (generators.empty()) throw ValidationError("group generation needs at least one permutation");
  const int n = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw ValidationError("generators of mixed degree");

  std::set<Perm> group{Perm::identity(n)};
  std::vector<Perm> frontier{Perm::identity(n)};
  std::vector<Perm> gens(generators.begin(), generators.end());
  for (const auto& g : generators) gens.push_back(g.inverse());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        Perm p = g.after(h);
        if (group.insert(p).second) {
          if (static_cast<int>(group.size()) > cap)
            throw GuardError("group closure exceeds cap " + std::to_string(cap));
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return std::vector<Perm>(group.begin(), group.end());
}

}  // namespace covlab
