#pragma once

#include <atomic>

namespace covlab {

// Hard compile-time cap on ground set size (bits in Subset).
inline constexpr int kMaxGround = 256;

// Fixed exhaustive-search guards.
inline constexpr int kBruteForceMaxGround = 12;
inline constexpr int kExactMuMaxGround = 12;
inline constexpr int kExactMuMaxGroup = 64;
inline constexpr int kExactOmegaMaxGround = 5;
inline constexpr int kDeficiencyMaxLeft = 20;
inline constexpr int kDefaultGroupCap = 5040;

// Runtime ground-size guard, default 64; the CLI overrides it from
// COVLAB_GUARD_GROUND. Values above kMaxGround are rejected.
class Limits {
 public:
  static int ground_limit() { return ground_.load(std::memory_order_relaxed); }
  static void set_ground_limit(int n);

 private:
  static std::atomic<int> ground_;
};

}  // namespace covlab
