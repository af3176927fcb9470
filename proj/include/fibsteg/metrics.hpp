#pragma once

// Distortion measures (MSE, PSNR, worst-case squared error) and the
// binary-vs-Fibonacci comparison harness.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibsteg/fibp.hpp"
#include "fibsteg/imageio.hpp"
#include "fibsteg/numsys.hpp"
#include "fibsteg/stego.hpp"

namespace fibsteg {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// PSNR in dB; identical images give Infinite, which orders above any finite value.
class Psnr {
 public:
  static Psnr infinite() { return Psnr(0.0, true); }
  static Psnr finite(double db) { return Psnr(db, false); }

  bool is_infinite() const { return infinite_; }
  double db() const;  // throws std::logic_error when infinite

  /// "inf" or fixed-point with `precision` decimals.
  std::string format(int precision = 6) const;

  friend std::partial_ordering operator<=>(const Psnr& a, const Psnr& b);
  friend bool operator==(const Psnr& a, const Psnr& b) = default;

 private:
  Psnr(double db, bool inf) : db_(db), infinite_(inf) {}
  double db_;
  bool infinite_;
};

/// Exact integer sum of squared differences over the pixel count.
double mse(const GrayImage& a, const GrayImage& b);

Psnr psnr_from_mse(double mse_value, double peak);
/// peak defaults to 2^depth - 1.
Psnr psnr(const GrayImage& a, const GrayImage& b, std::optional<double> peak = std::nullopt);

/// W(l)^2. Throws std::out_of_range for l >= planes().
std::uint64_t wse(const NumberSystem& system, std::size_t plane);
/// w * h * W(l)^2. Throws std::overflow_error past 2^64.
std::uint64_t wmse(const NumberSystem& system, std::size_t plane, std::uint64_t w, std::uint64_t h);

/// (alpha_p^2)^(l-p) < X^2 < (alpha_p^2)^l, certified against alpha_p's bracket.
struct SandwichCheck {
  Verdict lower = Verdict::Undecided;
  Verdict upper = Verdict::Undecided;
  bool holds() const { return lower == Verdict::Holds && upper == Verdict::Holds; }
};

struct SandwichRow {
  int p = 1;
  int l = 0;
  double lower = 0.0;         // (alpha^2)^(l-p)
  double upper = 0.0;         // (alpha^2)^l
  BigInt fib_square;          // F_p(l)^2
  SandwichCheck fib;          // F_p(l)^2 against the bounds above
  std::optional<BigInt> weight_square;     // W(l)^2 = F_p(l+p)^2 when requested
  std::optional<SandwichCheck> weight;     // W(l)^2 against the same bounds (informational)
  std::optional<SandwichCheck> weight_shifted;  // (alpha^2)^l < W(l)^2 < (alpha^2)^(l+p)
};

/// One row for the given l. Requires l > p.
SandwichRow sandwich(const AlphaRoot& root, int l);
/// Rows for p < l <= l_max.
std::vector<SandwichRow> sandwich_table(int p, int l_max, double tolerance = kDefaultTolerance);

struct DistortionReport {
  std::string system;
  int p = 0;  // 0 for binary
  std::size_t plane = 0;
  std::uint64_t weight = 0;
  double mse = 0.0;
  std::uint64_t wse_per_pixel = 0;
  std::uint64_t wmse = 0;
  Psnr psnr_db = Psnr::infinite();
  double peak = 255.0;
  int w = 0;
  int h = 0;
  double capacity_ratio = 0.0;
  std::size_t embedded = 0;
  std::optional<SandwichRow> sandwich;  // Fibonacci rows with plane > p
  std::optional<std::string> error;
};

/// Embeds at every (system, plane) using the same cover, message, and seed
/// (seeded-permutation traversal). Each row uses the longest message prefix
/// that fits its capacity. A row whose embed throws records the error and the
/// remaining rows still run. Rows are sorted by (plane, system order).
std::vector<DistortionReport> compare(const GrayImage& cover, std::span<const std::uint8_t> message,
                                      std::span<const std::size_t> planes, std::span<const NumberSystem> systems,
                                      std::uint64_t seed);

}  // namespace fibsteg
