#pragma once

#include <cstdint>

namespace kitebeam {

// splitmix64: tiny, fast, and identical on every platform. We do not use
// <random> distributions anywhere because their output is not specified
// bit-for-bit by the standard, and the library promises bit-identical
// reruns for identical seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). Modulo bias is irrelevant at our n.
  std::uint64_t uniform_index(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a master seed and an index, so
// that per-sample work can be partitioned across tasks in any order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  mix.next();
  return mix.next();
}

}  // namespace kitebeam
