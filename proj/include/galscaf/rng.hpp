#pragma once

#include <cstdint>

namespace galscaf {

// Deterministic xorshift generator. Used instead of <random> distributions
// so that certificates and property samples reproduce bit-for-bit across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t x = s_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    s_ = x;
    return x;
  }

  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform-ish in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t s_;
};

}  // namespace galscaf
