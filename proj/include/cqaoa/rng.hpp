#pragma once

#include <cstdint>

namespace cqaoa {

// SplitMix64 finalizer. Used both as a bit mixer for deriving independent
// seed streams and as a counter-based generator: hashing (seed, counter)
// gives a value that does not depend on call order.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                           std::uint64_t a,
                                           std::uint64_t b = 0) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

// Uniform double in [0, 1) keyed by (seed, counter).
inline double counter_uniform(std::uint64_t seed,
                              std::uint64_t counter) noexcept {
  const std::uint64_t bits = derive_seed(seed, counter);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace cqaoa
