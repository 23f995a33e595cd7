#pragma once

#include <cstdint>
#include <random>

namespace nno {

// All randomness flows through mt19937_64 plus the helpers below, which use
// only raw 64-bit draws. The standard pins down mt19937_64's output, so runs
// are reproducible across platforms; std::uniform_*_distribution would not be.
using Rng = std::mt19937_64;

// Uniform double in [0,1), 53-bit resolution.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Uniform integer in [0, n), unbiased via rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = n == 0 ? 0 : ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// splitmix64 finalizer; used to derive independent seed streams from a base
// seed and a small tag so that e.g. training and evaluation sampling never
// share a generator state.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace nno
