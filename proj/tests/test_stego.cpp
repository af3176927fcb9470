#include <gtest/gtest.h>

#include <cstdlib>
#include <vector>

#include "fibsteg/imageio.hpp"
#include "fibsteg/numsys.hpp"
#include "fibsteg/prng.hpp"
#include "fibsteg/stego.hpp"

namespace fibsteg {
namespace {

const NumberSystem kBinary = NumberSystem::binary(8);
const NumberSystem kFib1 = NumberSystem::fibonacci(1, 8);

TEST(Eligible, BinaryAlways) {
  for (std::uint32_t v = 0; v < 256; ++v) {
    for (std::size_t l = 0; l < 8; ++l) EXPECT_TRUE(eligible(kBinary, v, l));
  }
}

TEST(Eligible, FibonacciGapBlocksNeighbour) {
  // 3 is W(2); setting bit 3 as well would put two set bits side by side.
  EXPECT_FALSE(eligible(kFib1, 3, 3));
  EXPECT_TRUE(eligible(kFib1, 0, 0));
  EXPECT_FALSE(eligible(kFib1, 0, 12));
}

TEST(Eligible, FibonacciRangeBlocksTopPlane) {
  // 254 = 233 + 21: clearing is fine, but 30 + 233 = 263 would overflow.
  EXPECT_TRUE(eligible(kFib1, 254, 11));
  EXPECT_FALSE(eligible(kFib1, 30, 11));
}

TEST(Embed, BinaryPlaneZeroIsClassicalLsb) {
  const GrayImage cover = synth_noise(5, 16, 16);
  const auto msg = random_bits(cover.pixel_count(), 9);
  const StegoResult res = embed(cover, msg, {kBinary, 0, 0, Traversal::Sequential});
  ASSERT_EQ(res.embedded_count, msg.size());
  for (std::size_t i = 0; i < msg.size(); ++i) {
    EXPECT_EQ(res.stego_image.samples()[i], (cover.samples()[i] & ~1u) | msg[i]);
  }
  EXPECT_EQ(res.skipped_pixels, 0u);
  EXPECT_DOUBLE_EQ(res.capacity_ratio, 1.0);
}

TEST(Embed, ConstantCoverChangesByExactlyTheWeight) {
  const GrayImage cover = synth_constant(128, 64, 64);
  const EmbedConfig cfg{kFib1, 3, 0, Traversal::Sequential};
  // 128 = 89 + 34 + 5 already has bit 3 set: all-ones changes nothing.
  const StegoResult ones = embed(cover, std::vector<std::uint8_t>(4096, 1), cfg);
  EXPECT_EQ(ones.stego_image, cover);
  const StegoResult zeros = embed(cover, std::vector<std::uint8_t>(4096, 0), cfg);
  for (Sample s : zeros.stego_image.samples()) EXPECT_EQ(s, 128 - 5);
}

TEST(Embed, RoundTripAllSystemsAndPlanes) {
  std::vector<NumberSystem> systems{kBinary};
  for (int p = 1; p <= 3; ++p) systems.push_back(NumberSystem::fibonacci(p, 8));
  std::uint64_t seed = 1000;
  for (const NumberSystem& sys : systems) {
    for (std::size_t l = 0; l < sys.planes(); ++l) {
      for (Traversal mode : {Traversal::Sequential, Traversal::SeededPermutation}) {
        ++seed;
        const GrayImage cover = synth_noise(seed, 64, 64);
        const EmbedConfig cfg{sys, l, seed * 31, mode};
        const std::size_t cap = capacity(cover, cfg);
        if (cap < 2) continue;
        const auto msg = random_bits(cap / 2, seed + 7);
        const StegoResult res = embed(cover, msg, cfg);
        ASSERT_EQ(res.embedded_count, msg.size());
        ASSERT_EQ(extract(res.stego_image, msg.size(), cfg), msg) << sys.id() << " l=" << l;

        const auto a = cover.samples();
        const auto b = res.stego_image.samples();
        const long weight = sys.weight(l);
        for (std::size_t i = 0; i < a.size(); ++i) {
          const long d = std::labs(static_cast<long>(a[i]) - static_cast<long>(b[i]));
          ASSERT_TRUE(d == 0 || d == weight) << sys.id() << " l=" << l << " d=" << d;
          ASSERT_LE(b[i], 255);
          if (d != 0) ASSERT_TRUE(eligible(sys, b[i], l));
        }
      }
    }
  }
}

TEST(Embed, CarriersStayEligible) {
  const GrayImage cover = synth_noise(77, 32, 32);
  const NumberSystem fib2 = NumberSystem::fibonacci(2, 8);
  const EmbedConfig cfg{fib2, 4, 3, Traversal::SeededPermutation};
  const std::size_t cap = capacity(cover, cfg);
  const StegoResult res = embed(cover, random_bits(cap, 1), cfg);
  EXPECT_EQ(capacity(res.stego_image, cfg), cap);
  for (std::size_t i = 0; i < cover.pixel_count(); ++i) {
    EXPECT_EQ(eligible(fib2, cover.samples()[i], 4), eligible(fib2, res.stego_image.samples()[i], 4));
  }
}

TEST(Embed, DeterministicForFixedSeed) {
  const GrayImage cover = synth_noise(3, 64, 64);
  const auto msg = random_bits(500, 4);
  const EmbedConfig cfg{kFib1, 5, 123, Traversal::SeededPermutation};
  EXPECT_EQ(embed(cover, msg, cfg).stego_image, embed(cover, msg, cfg).stego_image);
  const EmbedConfig other{kFib1, 5, 124, Traversal::SeededPermutation};
  EXPECT_NE(embed(cover, msg, cfg).stego_image, embed(cover, msg, other).stego_image);
}

TEST(Embed, CapacityExceededKeepsPartialResult) {
  const GrayImage cover = synth_noise(8, 8, 8);
  const EmbedConfig cfg{kFib1, 6, 0, Traversal::Sequential};
  const std::size_t cap = capacity(cover, cfg);
  const auto msg = random_bits(cap + 5, 2);
  try {
    embed(cover, msg, cfg);
    FAIL() << "expected CapacityExceeded";
  } catch (const CapacityExceeded& e) {
    EXPECT_EQ(e.required(), cap + 5);
    EXPECT_EQ(e.available(), cap);
    ASSERT_TRUE(e.partial().has_value());
    EXPECT_EQ(e.partial()->embedded_count, cap);
    EXPECT_EQ(extract(e.partial()->stego_image, cap, cfg),
              std::vector<std::uint8_t>(msg.begin(), msg.begin() + static_cast<long>(cap)));
  }
  EXPECT_THROW(extract(cover, cap + 1, cfg), CapacityExceeded);
}

TEST(Embed, RejectsBadConfig) {
  const GrayImage cover = synth_noise(1, 4, 4);
  EXPECT_THROW(embed(cover, {}, {kFib1, 0, 0, Traversal::Sequential}), std::invalid_argument);
  EXPECT_THROW(embed(cover, std::vector<std::uint8_t>{1}, {kFib1, 12, 0, Traversal::Sequential}),
               std::invalid_argument);
  EXPECT_THROW(embed(cover, std::vector<std::uint8_t>{2}, {kFib1, 0, 0, Traversal::Sequential}),
               std::invalid_argument);
  EXPECT_THROW(embed(cover, std::vector<std::uint8_t>{1}, {NumberSystem::binary(16), 0, 0, Traversal::Sequential}),
               std::invalid_argument);
}

TEST(Extract, UntouchedCoverYieldsItsOwnPlane) {
  const GrayImage cover = synth_noise(21, 16, 16);
  const auto bits = extract(cover, cover.pixel_count(), {kBinary, 3, 0, Traversal::Sequential});
  for (std::size_t i = 0; i < bits.size(); ++i) EXPECT_EQ(bits[i], (cover.samples()[i] >> 3) & 1);
}

TEST(Extract, BinaryPlanesAreIndependent) {
  const GrayImage cover = synth_noise(22, 16, 16);
  const EmbedConfig cfg{kBinary, 7, 0, Traversal::Sequential};
  const auto before = extract(cover, cover.pixel_count(), cfg);
  std::vector<Sample> s(cover.samples().begin(), cover.samples().end());
  s[17] ^= 0x80;
  const GrayImage flipped(cover.width(), cover.height(), 8, s);
  const auto after = extract(flipped, cover.pixel_count(), cfg);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < before.size(); ++i) diff += before[i] != after[i];
  EXPECT_EQ(diff, 1u);
  EXPECT_NE(before[17], after[17]);
}

TEST(Bits, PackingIsMsbFirst) {
  const std::vector<std::uint8_t> bytes{0xA5, 0x01};
  const auto bits = bytes_to_bits(bytes);
  EXPECT_EQ(bits, (std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(bits_to_bytes(bits), bytes);
  EXPECT_EQ(bits_to_bytes(std::vector<std::uint8_t>{1, 1, 1}), (std::vector<std::uint8_t>{0xE0}));
}

}  // namespace
}  // namespace fibsteg
