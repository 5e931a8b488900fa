#pragma once

#include <cstdint>

namespace pathturan {

// SplitMix64 (Steele, Lea, Flood 2014; public-domain reference mix). The
// i-th output is a fixed function of seed + i*0x9e3779b97f4a7c15, so streams
// are reproducible across platforms and splittable by seed offset.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

} // namespace pathturan
