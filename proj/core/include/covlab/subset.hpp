#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "covlab/limits.hpp"

namespace covlab {

// Subset of {0..kMaxGround-1} as a fixed-width bitmask. Bits at or above
// the ground size must stay clear; operations that could set them take the
// ground size explicitly.
class Subset {
 public:
  static constexpr int kWords = kMaxGround / 64;

  constexpr Subset() = default;

  static Subset of(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s.add(e);
    return s;
  }
  static Subset single(int e) {
    Subset s;
    s.add(e);
    return s;
  }
  static Subset full(int n) {
    Subset s;
    for (int w = 0; n > 0; ++w, n -= 64)
      s.w_[w] = n >= 64 ? ~0ull : ((1ull << n) - 1);
    return s;
  }

  void add(int e) { w_[e >> 6] |= 1ull << (e & 63); }
  void remove(int e) { w_[e >> 6] &= ~(1ull << (e & 63)); }
  bool contains(int e) const { return (w_[e >> 6] >> (e & 63)) & 1; }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  friend Subset operator|(Subset a, const Subset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] |= b.w_[i];
    return a;
  }
  friend Subset operator&(Subset a, const Subset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= b.w_[i];
    return a;
  }
  // Set difference a \ b.
  friend Subset operator-(Subset a, const Subset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }
  Subset& operator|=(const Subset& b) { return *this = *this | b; }
  Subset& operator&=(const Subset& b) { return *this = *this & b; }
  Subset& operator-=(const Subset& b) { return *this = *this - b; }

  Subset complement(int ground) const { return full(ground) - *this; }

  bool subset_of(const Subset& b) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~b.w_[i]) return false;
    return true;
  }
  bool intersects(const Subset& b) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & b.w_[i]) return true;
    return false;
  }

  bool operator==(const Subset&) const = default;

  // Numeric order of the underlying wide integer; the fixed total order
  // used to sort canonical coverings.
  std::strong_ordering operator<=>(const Subset& b) const {
    for (int i = kWords - 1; i >= 0; --i)
      if (w_[i] != b.w_[i]) return w_[i] <=> b.w_[i];
    return std::strong_ordering::equal;
  }

  // Smallest element >= from, or -1.
  int next(int from) const {
    if (from >= kMaxGround) return -1;
    int w = from >> 6;
    std::uint64_t cur = w_[w] & (~0ull << (from & 63));
    while (true) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = w_[w];
    }
  }

  std::vector<int> elements() const {
    std::vector<int> v;
    for (int e = next(0); e >= 0; e = next(e + 1)) v.push_back(e);
    return v;
  }

  // "{0,2,5}"
  std::string to_string() const;

  std::uint64_t word(int i) const { return w_[i]; }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace covlab
