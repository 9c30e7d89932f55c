#pragma once

#include <optional>
#include <vector>

#include "covlab/subset.hpp"

namespace covlab {

// Partial map from {0..universe-1} into arbitrary integer targets.
// Entry -1 means undefined.
class PartialMap {
 public:
  explicit PartialMap(int universe) : img_(universe, -1) {}

  int universe() const { return static_cast<int>(img_.size()); }
  bool defined(int x) const { return img_[x] >= 0; }
  int image(int x) const { return img_[x]; }
  void set(int x, int y) { img_[x] = y; }
  void unset(int x) { img_[x] = -1; }

  int size() const {
    int c = 0;
    for (int v : img_) c += v >= 0;
    return c;
  }

  std::vector<int> domain() const {
    std::vector<int> d;
    for (int x = 0; x < universe(); ++x)
      if (defined(x)) d.push_back(x);
    return d;
  }

  Subset domain_set() const {
    Subset s;
    for (int x = 0; x < universe(); ++x)
      if (defined(x)) s.add(x);
    return s;
  }

  bool injective() const;

  // m-fold iterate, defined only while every intermediate image stays in
  // the domain; iterate(x, 0) == x.
  std::optional<int> iterate(int x, int m) const;

  bool operator==(const PartialMap&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace covlab
