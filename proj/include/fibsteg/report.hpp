#pragma once

// CSV / JSON rendering of the library's reports, and regeneration of the
// fixed set of reproduction tables.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fibsteg/fibp.hpp"
#include "fibsteg/metrics.hpp"
#include "fibsteg/numsys.hpp"

namespace fibsteg {

inline constexpr int kDefaultPrecision = 6;

std::string format_real(double x, int precision = kDefaultPrecision);

/// Header: p,n,lower,F,upper,loose_upper,ok
std::string bounds_csv(const BoundReport& report, int precision = kDefaultPrecision);
std::string bounds_json(const BoundReport& report, int precision = kDefaultPrecision);

/// Header: p,n,beta
std::string ratios_csv(const RatioSequence& ratios, int precision = kDefaultPrecision);
std::string ratios_json(const RatioSequence& ratios, int precision = kDefaultPrecision);

/// Header: index,weight
std::string weights_csv(const NumberSystem& system);
std::string weights_json(const NumberSystem& system);

std::string roots_csv(std::span<const AlphaRoot> roots, int precision = kDefaultPrecision);

std::string lemma3_csv(std::span<const Lemma3Record> records, int precision = kDefaultPrecision);
std::string lemma4_csv(const Lemma4Report& report, int precision = kDefaultPrecision);
std::string lemmas_json(std::span<const Lemma3Record> l3, const Lemma4Report& l4, int precision = kDefaultPrecision);

/// Header: system,plane,weight,wse,wmse,mse,psnr_db,capacity
std::string compare_csv(std::span<const DistortionReport> rows, int precision = kDefaultPrecision);
std::string compare_json(std::span<const DistortionReport> rows, int precision = kDefaultPrecision);

/// Header: p,l,lower,F_squared,upper,ok,W_squared,W_same_bounds,W_shifted_ok
std::string sandwich_csv(std::span<const SandwichRow> rows, int precision = kDefaultPrecision);

/// Fixed inputs of the comparison table.
struct ComparisonSetup {
  std::uint64_t cover_seed = 42;
  std::uint64_t message_seed = 7;
  std::uint64_t traversal_seed = 1;
  int width = 64;
  int height = 64;
};

std::vector<DistortionReport> standard_comparison(const ComparisonSetup& setup = {});

/// Writes roots.csv, table1_bounds_p2.csv, table2_ratios.csv,
/// table3_wmse_psnr.csv, and sandwich.csv into out_dir (created if missing).
/// Returns the written paths in that order.
std::vector<std::filesystem::path> write_tables(const std::filesystem::path& out_dir,
                                                int precision = kDefaultPrecision);

}  // namespace fibsteg
