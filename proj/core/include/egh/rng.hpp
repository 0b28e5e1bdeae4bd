#pragma once

#include <cstdint>
#include <random>

namespace egh {

// All randomized procedures draw through these helpers so that runs are
// reproducible bit for bit across platforms and thread counts: the
// standard distributions are implementation-defined, mt19937_64 is not.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  return std::mt19937_64(splitmix64(state));
}

// Per-instance stream: campaigns derive one generator per instance index,
// so the worker schedule cannot affect results.
inline std::mt19937_64 make_instance_rng(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t state = master_seed ^ (0xD1B54A32D192ED03ULL + index);
  splitmix64(state);
  return std::mt19937_64(splitmix64(state));
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace egh
