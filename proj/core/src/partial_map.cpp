#include "covlab/partial_map.hpp"

#include <algorithm>

namespace covlab {

bool PartialMap::injective() const {
  std::vector<int> seen;
  for (int v : img_)
    if (v >= 0) seen.push_back(v);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::optional<int> PartialMap::iterate(int x, int m) const {
  int cur = x;
  for (int i = 0; i < m; ++i) {
    if (cur < 0 || cur >= universe() || !defined(cur)) return std::nullopt;
    cur = img_[cur];
  }
  return cur;
}

}  // namespace covlab
