#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fibsteg {

/// SplitMix64. Fixed constants so every implementation reproduces the same
/// stream for a given seed:
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// floor(next() * bound / 2^64); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Fisher-Yates over 0..n-1: for i = n-1 down to 1, swap(order[i], order[below(i+1)]).
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

/// count bits, each the top bit of one next() call.
std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed);

}  // namespace fibsteg
