#include "fibsteg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <tuple>

namespace fibsteg {

double Psnr::db() const {
  if (infinite_) throw std::logic_error("PSNR is infinite");
  return db_;
}

std::string Psnr::format(int precision) const {
  if (infinite_) return "inf";
  return fmt::format("{:.{}f}", db_, precision);
}

std::partial_ordering operator<=>(const Psnr& a, const Psnr& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return a.db_ <=> b.db_;
}

double mse(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height() || a.depth() != b.depth()) {
    throw DimensionMismatch("images differ in dimensions or depth");
  }
  const auto sa = a.samples();
  const auto sb = b.samples();
  unsigned __int128 sum = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(sa[i]) - static_cast<std::int64_t>(sb[i]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(sa.size());
}

Psnr psnr_from_mse(double mse_value, double peak) {
  if (mse_value <= 0.0) return Psnr::infinite();
  return Psnr::finite(10.0 * std::log10(peak * peak / mse_value));
}

Psnr psnr(const GrayImage& a, const GrayImage& b, std::optional<double> peak) {
  const double m = mse(a, b);
  return psnr_from_mse(m, peak.value_or(static_cast<double>(a.max_value())));
}

std::uint64_t wse(const NumberSystem& system, std::size_t plane) {
  const std::uint64_t w = system.weight(plane);
  return w * w;
}

std::uint64_t wmse(const NumberSystem& system, std::size_t plane, std::uint64_t w, std::uint64_t h) {
  const unsigned __int128 total = static_cast<unsigned __int128>(wse(system, plane)) * w * h;
  if (total > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("WMSE exceeds 2^64");
  return static_cast<std::uint64_t>(total);
}

namespace {

SandwichCheck check_square(const AlphaRoot& root, unsigned low_exp, unsigned high_exp, const BigInt& square) {
  return {alpha_pow_less(root, low_exp, square), alpha_pow_greater(root, high_exp, square)};
}

}  // namespace

SandwichRow sandwich(const AlphaRoot& root, int l) {
  const int p = root.p;
  if (l <= p) throw std::invalid_argument("sandwich needs l > p");
  const PSequence seq = generate_sequence(p, static_cast<std::size_t>(l + p));
  SandwichRow row;
  row.p = p;
  row.l = l;
  const double a2 = root.value * root.value;
  row.lower = 1.0;
  for (int i = 0; i < l - p; ++i) row.lower *= a2;
  row.upper = row.lower;
  for (int i = 0; i < p; ++i) row.upper *= a2;

  // (alpha^2)^k = alpha^(2k), compared exactly.
  const auto lo_exp = static_cast<unsigned>(2 * (l - p));
  const auto hi_exp = static_cast<unsigned>(2 * l);
  row.fib_square = seq[l] * seq[l];
  row.fib = check_square(root, lo_exp, hi_exp, row.fib_square);
  row.weight_square = seq[l + p] * seq[l + p];
  row.weight = check_square(root, lo_exp, hi_exp, *row.weight_square);
  row.weight_shifted = check_square(root, static_cast<unsigned>(2 * l), static_cast<unsigned>(2 * (l + p)),
                                    *row.weight_square);
  return row;
}

std::vector<SandwichRow> sandwich_table(int p, int l_max, double tolerance) {
  const AlphaRoot root = find_alpha(p, tolerance);
  std::vector<SandwichRow> rows;
  for (int l = p + 1; l <= l_max; ++l) rows.push_back(sandwich(root, l));
  return rows;
}

std::vector<DistortionReport> compare(const GrayImage& cover, std::span<const std::uint8_t> message,
                                      std::span<const std::size_t> planes, std::span<const NumberSystem> systems,
                                      std::uint64_t seed) {
  std::vector<DistortionReport> rows;
  for (const NumberSystem& system : systems) {
    std::optional<AlphaRoot> root;
    if (system.kind() == SystemKind::FibonacciP) root = find_alpha(system.order());
    for (std::size_t plane : planes) {
      DistortionReport r;
      r.system = system.id();
      r.p = system.order();
      r.plane = plane;
      r.peak = static_cast<double>(cover.max_value());
      r.w = cover.width();
      r.h = cover.height();
      try {
        const EmbedConfig cfg{system, plane, seed, Traversal::SeededPermutation};
        r.weight = system.weight(plane);
        r.wse_per_pixel = wse(system, plane);
        r.wmse = wmse(system, plane, static_cast<std::uint64_t>(cover.width()),
                      static_cast<std::uint64_t>(cover.height()));
        const std::size_t fit = std::min(message.size(), capacity(cover, cfg));
        if (fit == 0) {
          r.mse = 0.0;
          r.psnr_db = Psnr::infinite();
        } else {
          const StegoResult res = embed(cover, message.first(fit), cfg);
          r.mse = mse(cover, res.stego_image);
          r.psnr_db = psnr_from_mse(r.mse, r.peak);
          r.capacity_ratio = res.capacity_ratio;
          r.embedded = res.embedded_count;
        }
        if (root && static_cast<int>(plane) > root->p) r.sandwich = sandwich(*root, static_cast<int>(plane));
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      rows.push_back(std::move(r));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const DistortionReport& a, const DistortionReport& b) {
    return std::tuple(a.plane, a.p) < std::tuple(b.plane, b.p);
  });
  return rows;
}

}  // namespace fibsteg
