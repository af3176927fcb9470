#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fibsteg/imageio.hpp"
#include "fibsteg/metrics.hpp"
#include "fibsteg/prng.hpp"

namespace fibsteg {
namespace {

const NumberSystem kBinary = NumberSystem::binary(8);
const NumberSystem kFib1 = NumberSystem::fibonacci(1, 8);

GrayImage with_pixel(const GrayImage& img, std::size_t i, Sample v) {
  std::vector<Sample> s(img.samples().begin(), img.samples().end());
  s[i] = v;
  return {img.width(), img.height(), img.depth(), std::move(s)};
}

TEST(Mse, Basics) {
  const GrayImage a = synth_constant(100, 64, 64);
  EXPECT_EQ(mse(a, a), 0.0);
  EXPECT_DOUBLE_EQ(mse(a, with_pixel(a, 77, 116)), 0.0625);
  EXPECT_DOUBLE_EQ(mse(a, synth_constant(101, 64, 64)), 1.0);
  EXPECT_THROW(mse(a, synth_constant(100, 64, 32)), DimensionMismatch);
}

TEST(Psnr, Basics) {
  const GrayImage a = synth_constant(100, 64, 64);
  EXPECT_TRUE(psnr(a, a).is_infinite());
  EXPECT_EQ(psnr(a, a).format(), "inf");
  EXPECT_NEAR(psnr_from_mse(0.0625, 255).db(), 60.17200343523835, 1e-9);
  EXPECT_NEAR(psnr(a, with_pixel(a, 0, 116)).db(), 60.17200343523835, 1e-9);
  EXPECT_DOUBLE_EQ(psnr_from_mse(255.0 * 255.0, 255).db(), 0.0);
  EXPECT_THROW(psnr(a, synth_constant(1, 2, 2)), DimensionMismatch);
  EXPECT_THROW(psnr(a, a).db(), std::logic_error);
}

TEST(Psnr, InfiniteOrdersAboveFinite) {
  EXPECT_GT(Psnr::infinite(), Psnr::finite(1e9));
  EXPECT_LT(Psnr::finite(10), Psnr::finite(20));
  EXPECT_EQ(Psnr::infinite(), Psnr::infinite());
}

TEST(Wmse, WorstCase) {
  EXPECT_EQ(wmse(kBinary, 3, 1, 1), 64u);
  EXPECT_EQ(wmse(kFib1, 3, 1, 1), 25u);
  EXPECT_EQ(wmse(kBinary, 0, 1, 1), 1u);
  EXPECT_EQ(wmse(kFib1, 0, 1, 1), 1u);
  EXPECT_EQ(wmse(kBinary, 7, 64, 64), 4096u * 16384u);
  EXPECT_THROW(wmse(kBinary, 8, 1, 1), std::out_of_range);
}

TEST(Wmse, FibonacciBelowBinaryFromPlaneTwo) {
  for (int p = 1; p <= 6; ++p) {
    const NumberSystem fib = NumberSystem::fibonacci(p, 16);
    const NumberSystem bin = NumberSystem::binary(16);
    for (std::size_t l = 0; l < 16; ++l) {
      if (l < 2) {
        EXPECT_EQ(wse(fib, l), wse(bin, l));
      } else {
        EXPECT_LT(wse(fib, l), wse(bin, l)) << "p=" << p << " l=" << l;
        EXPECT_EQ(wse(bin, l), std::uint64_t{1} << (2 * l));
      }
    }
  }
}

TEST(Sandwich, GoldenRatioPlaneFive) {
  const SandwichRow row = sandwich(find_alpha(1), 5);
  EXPECT_NEAR(row.lower, 46.97871376374779, 1e-6);  // phi^8
  EXPECT_NEAR(row.upper, 122.99186938124421, 1e-6);  // phi^10
  EXPECT_EQ(row.fib_square, 64);
  EXPECT_TRUE(row.fib.holds());
  ASSERT_TRUE(row.weight_square && row.weight && row.weight_shifted);
  EXPECT_EQ(*row.weight_square, 169);
  EXPECT_EQ(row.weight->lower, Verdict::Holds);
  EXPECT_EQ(row.weight->upper, Verdict::Violated);
  EXPECT_TRUE(row.weight_shifted->holds());
}

TEST(Sandwich, HoldsUpToForty) {
  for (int p = 1; p <= 5; ++p) {
    const auto rows = sandwich_table(p, 40);
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(40 - p));
    for (const SandwichRow& r : rows) {
      EXPECT_TRUE(r.fib.holds()) << "p=" << p << " l=" << r.l;
      EXPECT_TRUE(r.weight_shifted->holds()) << "p=" << p << " l=" << r.l;
    }
  }
  EXPECT_THROW(sandwich(find_alpha(2), 2), std::invalid_argument);
}

class CompareFixture : public ::testing::Test {
 protected:
  const GrayImage cover = synth_noise(42, 64, 64);
  const std::vector<std::uint8_t> message = random_bits(64 * 64, 7);
  const std::vector<NumberSystem> systems{kBinary, kFib1, NumberSystem::fibonacci(2, 8)};
};

TEST_F(CompareFixture, SortedAndComplete) {
  const std::vector<std::size_t> planes{3, 0, 5};
  const auto rows = compare(cover, message, planes, systems, 1);
  ASSERT_EQ(rows.size(), 9u);
  const char* order[] = {"binary", "fib1", "fib2"};
  const std::size_t sorted_planes[] = {0, 3, 5};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].plane, sorted_planes[i / 3]);
    EXPECT_EQ(rows[i].system, order[i % 3]);
    EXPECT_FALSE(rows[i].error);
  }
}

TEST_F(CompareFixture, PlaneThreeFavoursFibonacci) {
  const std::vector<std::size_t> planes{3};
  const auto rows = compare(cover, message, planes, systems, 1);
  const auto& bin = rows[0];
  const auto& fib = rows[1];
  EXPECT_EQ(bin.wse_per_pixel, 64u);
  EXPECT_EQ(fib.wse_per_pixel, 25u);
  EXPECT_EQ(fib.wmse, 25u * 4096u);
  EXPECT_GT(fib.psnr_db, bin.psnr_db);
  ASSERT_TRUE(fib.sandwich);
  EXPECT_TRUE(fib.sandwich->fib.holds());
  EXPECT_FALSE(bin.sandwich);
}

TEST_F(CompareFixture, PlaneZeroEqualWorstCase) {
  const std::vector<std::size_t> planes{0};
  const auto rows = compare(cover, message, planes, systems, 1);
  EXPECT_EQ(rows[0].wse_per_pixel, 1u);
  EXPECT_EQ(rows[1].wse_per_pixel, 1u);
  EXPECT_EQ(rows[0].wmse, rows[1].wmse);
}

TEST_F(CompareFixture, MeasuredNeverExceedsWorstCase) {
  std::vector<std::size_t> planes;
  for (std::size_t l = 0; l < 12; ++l) planes.push_back(l);
  for (const auto& r : compare(cover, message, planes, systems, 5)) {
    if (r.error) continue;
    EXPECT_LE(r.mse, static_cast<double>(r.wse_per_pixel)) << r.system << " l=" << r.plane;
    EXPECT_GE(r.mse, 0.0);
    EXPECT_EQ(r.psnr_db.is_infinite(), r.mse == 0.0);
  }
}

TEST_F(CompareFixture, ErrorRowsDoNotAbortOthers) {
  std::vector<std::size_t> planes{7, 8};
  const auto rows = compare(cover, message, planes, systems, 1);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_FALSE(rows[0].error);  // binary plane 7
  EXPECT_TRUE(rows[3].error);   // binary plane 8 does not exist
  EXPECT_FALSE(rows[4].error);
  EXPECT_FALSE(rows[5].error);
}

TEST_F(CompareFixture, DistortionGrowsWithPlane) {
  std::vector<std::size_t> planes{0, 1, 2, 3, 4, 5, 6};
  const auto rows = compare(cover, message, planes, systems, 1);
  for (std::size_t s = 0; s < systems.size(); ++s) {
    for (std::size_t l = 1; l < planes.size(); ++l) {
      EXPECT_GE(rows[l * 3 + s].mse, rows[(l - 1) * 3 + s].mse) << rows[l * 3 + s].system << " l=" << l;
    }
  }
  // Binary keeps growing through its top plane.
  std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<NumberSystem> bin{kBinary};
  const auto brows = compare(cover, message, all, bin, 1);
  for (std::size_t l = 1; l < brows.size(); ++l) EXPECT_GT(brows[l].mse, brows[l - 1].mse);
}

TEST_F(CompareFixture, TopFibonacciPlaneLosesCapacity) {
  // Setting bit 11 (233) is only legal for values <= 22, so the top virtual
  // plane carries far fewer bits than plane 10 and its MSE drops.
  std::vector<std::size_t> planes{10, 11};
  const std::vector<NumberSystem> fib{kFib1};
  const auto rows = compare(cover, message, planes, fib, 1);
  EXPECT_LT(rows[1].capacity_ratio, rows[0].capacity_ratio);
  EXPECT_LT(rows[1].mse, rows[0].mse);
}

}  // namespace
}  // namespace fibsteg
