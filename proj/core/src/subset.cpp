#include "covlab/subset.hpp"

namespace covlab {

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e = next(0); e >= 0; e = next(e + 1)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace covlab
