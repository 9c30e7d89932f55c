#pragma once

#include <span>
#include <string>
#include <vector>

#include "covlab/subset.hpp"

namespace covlab {

// Permutation of {0..n-1}.
class Perm {
 public:
  explicit Perm(std::vector<int> image);
  static Perm identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  bool is_identity() const;

  Perm inverse() const;
  // (*this) after other: x -> this(other(x)).
  Perm after(const Perm& other) const;

  Subset apply(const Subset& s) const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

// Closure of the generators under composition and inverse, sorted; throws
// GuardError when the closure exceeds cap.
std::vector<Perm> generate_group(std::span<const Perm> generators, int cap);

}  // namespace covlab
