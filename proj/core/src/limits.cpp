#include "covlab/limits.hpp"

#include "covlab/errors.hpp"

namespace covlab {

std::atomic<int> Limits::ground_{64};

void Limits::set_ground_limit(int n) {
  if (n < 1 || n > kMaxGround)
    throw GuardError("ground limit must be in 1.." + std::to_string(kMaxGround) + ", got " +
                     std::to_string(n));
  ground_.store(n, std::memory_order_relaxed);
}

}  // namespace covlab
