#pragma once

#include <cstdint>

namespace causalfair {

//! splitmix64 finalizer (Steele et al.), used everywhere a seed has to be
//! derived from another: child = splitmix64(parent + (index+1) * GAMMA).
//! Keeps replicate streams independent and reproducible regardless of how
//! work is scheduled.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(parent + (index + 1) * 0x9E3779B97F4A7C15ull);
}

}  // namespace causalfair
