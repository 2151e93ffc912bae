#pragma once

#include <cstdint>

namespace ifm {

// splitmix64: stateless-feeling 64-bit generator driven by a Weyl sequence.
// Chosen over std::mt19937_64 because the entire algorithm fits in a dozen
// lines, so the sampled sequences are reproducible from the seed alone on any
// platform or language, which the regression tests rely on.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with the full 53 bits of mantissa.
  constexpr double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ifm
