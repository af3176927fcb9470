#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "fibsteg/numsys.hpp"

namespace fibsteg {
namespace {

std::vector<std::uint32_t> weights_of(const NumberSystem& s) { return {s.weights().begin(), s.weights().end()}; }

std::vector<std::uint8_t> bits_at(const NumberSystem& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::uint8_t> bits(s.planes(), 0);
  for (auto i : idx) bits.at(i) = 1;
  return bits;
}

TEST(BuildSystem, Binary) {
  const NumberSystem s = build_system(SystemKind::Binary, 8);
  EXPECT_EQ(weights_of(s), (std::vector<std::uint32_t>{1, 2, 4, 8, 16, 32, 64, 128}));
  EXPECT_EQ(s.planes(), 8u);
  EXPECT_EQ(s.gap(), 1);
  EXPECT_EQ(s.id(), "binary");
}

TEST(BuildSystem, FibonacciOne) {
  const NumberSystem s = build_system(SystemKind::FibonacciP, 8, 1);
  EXPECT_EQ(weights_of(s), (std::vector<std::uint32_t>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233}));
  EXPECT_EQ(s.planes(), 12u);
  EXPECT_EQ(s.gap(), 2);
  EXPECT_EQ(s.id(), "fib1");
}

TEST(BuildSystem, FibonacciTwoDropsDuplicateOnes) {
  const NumberSystem s = NumberSystem::fibonacci(2, 4);
  EXPECT_EQ(weights_of(s), (std::vector<std::uint32_t>{1, 2, 3, 4, 6, 9, 13}));
  EXPECT_EQ(s.gap(), 3);
}

TEST(BuildSystem, FibonacciThreeDepthEight) {
  const NumberSystem s = NumberSystem::fibonacci(3, 8);
  EXPECT_EQ(weights_of(s), (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50, 69, 95, 131,
                                                       181, 250}));
}

TEST(BuildSystem, MorePlanesThanBinary) {
  for (int depth = 2; depth <= kMaxDepth; ++depth) {
    for (int p = 1; p <= 6; ++p) {
      EXPECT_GT(NumberSystem::fibonacci(p, depth).planes(), static_cast<std::size_t>(depth))
          << "p=" << p << " depth=" << depth;
    }
    EXPECT_EQ(NumberSystem::binary(depth).planes(), static_cast<std::size_t>(depth));
  }
  // Depth 1 only has the single weight 1.
  EXPECT_EQ(NumberSystem::fibonacci(1, 1).planes(), 1u);
}

TEST(BuildSystem, MinimalCoverage) {
  for (int depth = 1; depth <= kMaxDepth; ++depth) {
    for (int p = 1; p <= 5; ++p) {
      const NumberSystem s = NumberSystem::fibonacci(p, depth);
      const auto w = s.weights();
      std::uint64_t sum = 0;
      for (auto x : w) sum += x;
      EXPECT_GE(sum, s.max_value());
      EXPECT_LE(w.back(), s.max_value());
      // The largest greedy value over m planes is W(m) - 1; dropping the top
      // plane would leave values uncovered.
      const Codeword top = decompose(s, s.max_value());
      EXPECT_EQ(recompose(top), s.max_value());
    }
  }
}

TEST(BuildSystem, WeightDominance) {
  for (int p = 1; p <= 6; ++p) {
    const NumberSystem s = NumberSystem::fibonacci(p, 16);
    const auto w = s.weights();
    for (std::size_t i = 0; i < w.size() && i < 32; ++i) {
      const std::uint64_t pow2 = std::uint64_t{1} << i;
      EXPECT_LE(w[i], pow2);
      if (i >= 2) EXPECT_LT(w[i], pow2) << "p=" << p << " i=" << i;
    }
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_GT(w[i], w[i - 1]);
  }
}

TEST(BuildSystem, RejectsBadInput) {
  EXPECT_THROW(NumberSystem::binary(0), std::invalid_argument);
  EXPECT_THROW(NumberSystem::binary(17), std::invalid_argument);
  EXPECT_THROW(NumberSystem::fibonacci(0, 8), std::invalid_argument);
  EXPECT_THROW(NumberSystem::parse("fib", 8), std::invalid_argument);
  EXPECT_THROW(NumberSystem::parse("fibx", 8), std::invalid_argument);
  EXPECT_THROW(NumberSystem::parse("ternary", 8), std::invalid_argument);
  EXPECT_EQ(NumberSystem::parse("fib3", 8), NumberSystem::fibonacci(3, 8));
}

TEST(Decompose, HandTraces) {
  const NumberSystem fib1 = NumberSystem::fibonacci(1, 8);
  EXPECT_EQ(decompose(fib1, 10).bits, bits_at(fib1, {4, 1}));
  EXPECT_EQ(decompose(fib1, 255).bits, bits_at(fib1, {11, 6, 0}));
  EXPECT_EQ(decompose(fib1, 0).bits, bits_at(fib1, {}));
  EXPECT_EQ(decompose(NumberSystem::binary(8), 0).bits, std::vector<std::uint8_t>(8, 0));
  EXPECT_EQ(render_bits(decompose(fib1, 10).bits), "0100 1000 0000");
}

TEST(Decompose, RejectsOutOfRange) {
  EXPECT_THROW(decompose(NumberSystem::fibonacci(1, 8), 256), std::out_of_range);
  EXPECT_THROW(decompose(NumberSystem::binary(4), 16), std::out_of_range);
}

TEST(Recompose, Binary) {
  const NumberSystem b = NumberSystem::binary(8);
  // 0xA5 = 1010 0101, bit 0 first.
  EXPECT_EQ(recompose(b, bits_at(b, {0, 2, 5, 7})), 165u);
  EXPECT_EQ(recompose(decompose(b, 0)), 0u);
}

TEST(IsValid, GapRule) {
  const NumberSystem fib1 = NumberSystem::fibonacci(1, 8);
  EXPECT_FALSE(is_valid(fib1, bits_at(fib1, {2, 3})));
  EXPECT_TRUE(is_valid(fib1, bits_at(fib1, {2, 4})));
  const NumberSystem fib2 = NumberSystem::fibonacci(2, 8);
  EXPECT_TRUE(is_valid(fib2, bits_at(fib2, {1, 4})));
  EXPECT_FALSE(is_valid(fib2, bits_at(fib2, {1, 3})));
  const NumberSystem b = NumberSystem::binary(8);
  for (unsigned v = 0; v < 256; ++v) EXPECT_TRUE(is_valid(b, decompose(b, v).bits));
  EXPECT_TRUE(is_valid(b, std::vector<std::uint8_t>(8, 1)));
}

TEST(IsValid, RangeRule) {
  const NumberSystem fib1 = NumberSystem::fibonacci(1, 8);
  // 233 + 34 = 267 respects the gap but exceeds 255.
  EXPECT_FALSE(is_valid(fib1, bits_at(fib1, {11, 7})));
  EXPECT_THROW(is_valid(fib1, std::vector<std::uint8_t>(5, 0)), std::invalid_argument);
}

TEST(Decompose, RoundTripAndValidity) {
  std::vector<NumberSystem> systems{NumberSystem::binary(8)};
  for (int p = 1; p <= 5; ++p) systems.push_back(NumberSystem::fibonacci(p, 8));
  for (const auto& s : systems) {
    for (std::uint32_t v = 0; v <= 255; ++v) {
      const Codeword w = decompose(s, v);
      ASSERT_EQ(recompose(w), v) << s.id();
      ASSERT_TRUE(is_valid(s, w.bits)) << s.id() << " v=" << v;
    }
  }
}

TEST(Decompose, RoundTripDepthSixteen) {
  for (const auto& s : {NumberSystem::binary(16), NumberSystem::fibonacci(1, 16), NumberSystem::fibonacci(4, 16)}) {
    for (std::uint32_t v = 0; v <= s.max_value(); v += 7) ASSERT_EQ(recompose(decompose(s, v)), v);
    ASSERT_EQ(recompose(decompose(s, s.max_value())), s.max_value());
  }
}

TEST(Decompose, GreedyIsTheUniqueValidCodeword) {
  for (int p = 1; p <= 3; ++p) {
    const NumberSystem s = NumberSystem::fibonacci(p, 8);
    const std::size_t m = s.planes();
    std::vector<int> count(256, 0);
    std::vector<std::uint64_t> mask_of(256, 0);
    std::vector<std::uint8_t> bits(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> i) & 1;
      if (!is_valid(s, bits)) continue;
      const auto v = recompose(s, bits);
      ++count[v];
      mask_of[v] = mask;
    }
    for (std::uint32_t v = 0; v < 256; ++v) {
      ASSERT_EQ(count[v], 1) << "p=" << p << " v=" << v;
      const Codeword g = decompose(s, v);
      std::uint64_t gmask = 0;
      for (std::size_t i = 0; i < m; ++i) gmask |= std::uint64_t{g.bits[i]} << i;
      ASSERT_EQ(gmask, mask_of[v]);
    }
  }
}

}  // namespace
}  // namespace fibsteg
