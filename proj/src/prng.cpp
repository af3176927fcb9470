#include "fibsteg/prng.hpp"

#include <numeric>
#include <utility>

namespace fibsteg {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(next()) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  for (std::size_t i = n; i-- > 1;) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed) {
  std::vector<std::uint8_t> bits(count);
  SplitMix64 rng(seed);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() >> 63);
  return bits;
}

}  // namespace fibsteg
