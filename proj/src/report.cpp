#include "fibsteg/report.hpp"

#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "fibsteg/imageio.hpp"
#include "fibsteg/prng.hpp"

namespace fibsteg {

using nlohmann::json;

namespace {

std::string check_flag(const std::optional<SandwichCheck>& c) {
  if (!c) return "";
  return c->holds() ? "1" : "0";
}

// Reals in JSON are emitted as fixed-precision strings so output bytes do not
// depend on the shortest-round-trip formatter.
json real(double x, int precision) { return format_real(x, precision); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

}  // namespace

std::string format_real(double x, int precision) { return fmt::format("{:.{}f}", x, precision); }

std::string bounds_csv(const BoundReport& report, int precision) {
  std::string out = "p,n,lower,F,upper,loose_upper,ok\n";
  for (const BoundRow& row : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", report.p, row.n, format_real(row.lower, precision),
                       to_string(row.value), format_real(row.upper, precision), to_string(row.loose_upper),
                       row.ok() ? 1 : 0);
  }
  return out;
}

std::string bounds_json(const BoundReport& report, int precision) {
  json j;
  j["p"] = report.p;
  j["n_min"] = report.n_min;
  j["n_max"] = report.n_max;
  j["alpha"] = real(report.root.value, precision);
  j["violations"] = report.violations;
  j["undecided"] = report.undecided;
  j["rows"] = json::array();
  for (const BoundRow& row : report.rows) {
    j["rows"].push_back({{"n", row.n},
                         {"lower", real(row.lower, precision)},
                         {"F", to_string(row.value)},
                         {"upper", real(row.upper, precision)},
                         {"loose_upper", to_string(row.loose_upper)},
                         {"lower_check", to_string(row.lower_verdict)},
                         {"upper_check", to_string(row.upper_verdict)},
                         {"loose_check", to_string(row.loose_verdict)},
                         {"ok", row.ok()}});
  }
  return j.dump(2) + "\n";
}

std::string ratios_csv(const RatioSequence& ratios, int precision) {
  std::string out = "p,n,beta\n";
  for (std::size_t n = 0; n < ratios.betas.size(); ++n) {
    out += fmt::format("{},{},{}\n", ratios.p, n, format_real(ratios.betas[n], precision));
  }
  return out;
}

std::string ratios_json(const RatioSequence& ratios, int precision) {
  json j;
  j["p"] = ratios.p;
  j["betas"] = json::array();
  for (double b : ratios.betas) j["betas"].push_back(real(b, precision));
  return j.dump(2) + "\n";
}

std::string weights_csv(const NumberSystem& system) {
  std::string out = "index,weight\n";
  const auto w = system.weights();
  for (std::size_t i = 0; i < w.size(); ++i) out += fmt::format("{},{}\n", i, w[i]);
  return out;
}

std::string weights_json(const NumberSystem& system) {
  const auto w = system.weights();
  json j{{"system", system.id()},
         {"depth", system.depth()},
         {"planes", system.planes()},
         {"gap", system.gap()},
         {"weights", std::vector<std::uint32_t>(w.begin(), w.end())}};
  return j.dump(2) + "\n";
}

std::string roots_csv(std::span<const AlphaRoot> roots, int precision) {
  std::string out = "p,alpha,bracket_lo,bracket_hi\n";
  for (const AlphaRoot& r : roots) {
    out += fmt::format("{},{},{:.17g},{:.17g}\n", r.p, format_real(r.value, precision), r.bracket_lo,
                       r.bracket_hi);
  }
  return out;
}

std::string lemma3_csv(std::span<const Lemma3Record> records, int precision) {
  std::string out = "k,alpha_k,alpha_next,decreasing,approaches_one,midpoint,power_below,power_above,ok\n";
  for (const Lemma3Record& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.k, format_real(r.alpha_k, precision),
                       format_real(r.alpha_next, precision), int(r.decreasing), int(r.approaches_one),
                       int(r.midpoint), int(r.power_below), int(r.power_above), int(r.passed()));
  }
  return out;
}

std::string lemma4_csv(const Lemma4Report& report, int precision) {
  std::string out = "check,ok\n";
  out += fmt::format("radical_chain,{}\n", int(report.radical_chain));
  out += fmt::format("alpha_below_radical,{}\n", int(report.alpha_below_radical));
  out += fmt::format("descending_powers,{}\n", int(report.descending_powers));
  out += fmt::format("ascending_powers,{}\n", int(report.ascending_powers));
  out += "k,radical\n";
  for (std::size_t i = 0; i < report.radicals.size(); ++i) {
    out += fmt::format("{},{}\n", i + 1, format_real(report.radicals[i], precision));
  }
  return out;
}

std::string lemmas_json(std::span<const Lemma3Record> l3, const Lemma4Report& l4, int precision) {
  json j;
  j["lemma3"] = json::array();
  for (const Lemma3Record& r : l3) {
    j["lemma3"].push_back({{"k", r.k},
                           {"alpha_k", real(r.alpha_k, precision)},
                           {"alpha_next", real(r.alpha_next, precision)},
                           {"decreasing", r.decreasing},
                           {"approaches_one", r.approaches_one},
                           {"midpoint", r.midpoint},
                           {"power_below", r.power_below},
                           {"power_above", r.power_above}});
  }
  json radicals = json::array();
  for (double x : l4.radicals) radicals.push_back(real(x, precision));
  j["lemma4"] = {{"k_max", l4.k_max},
                 {"p_max", l4.p_max},
                 {"radical_chain", l4.radical_chain},
                 {"alpha_below_radical", l4.alpha_below_radical},
                 {"descending_powers", l4.descending_powers},
                 {"ascending_powers", l4.ascending_powers},
                 {"radicals", radicals},
                 {"failures", l4.failures}};
  return j.dump(2) + "\n";
}

std::string compare_csv(std::span<const DistortionReport> rows, int precision) {
  std::string out = "system,plane,weight,wse,wmse,mse,psnr_db,capacity\n";
  for (const DistortionReport& r : rows) {
    if (r.error) {
      out += fmt::format("{},{},,,,,,\n", r.system, r.plane);
      continue;
    }
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.system, r.plane, r.weight, r.wse_per_pixel, r.wmse,
                       format_real(r.mse, precision), r.psnr_db.format(precision),
                       format_real(r.capacity_ratio, precision));
  }
  return out;
}

std::string compare_json(std::span<const DistortionReport> rows, int precision) {
  json arr = json::array();
  for (const DistortionReport& r : rows) {
    json j{{"system", r.system}, {"plane", r.plane}};
    if (r.error) {
      j["error"] = *r.error;
      arr.push_back(j);
      continue;
    }
    j["weight"] = r.weight;
    j["wse"] = r.wse_per_pixel;
    j["wmse"] = r.wmse;
    j["mse"] = real(r.mse, precision);
    j["psnr_db"] = r.psnr_db.format(precision);
    j["peak"] = real(r.peak, precision);
    j["w"] = r.w;
    j["h"] = r.h;
    j["capacity"] = real(r.capacity_ratio, precision);
    j["embedded"] = r.embedded;
    if (r.sandwich) {
      const SandwichRow& s = *r.sandwich;
      j["sandwich"] = {{"lower", real(s.lower, precision)},
                       {"upper", real(s.upper, precision)},
                       {"F_squared", to_string(s.fib_square)},
                       {"F_ok", s.fib.holds()},
                       {"W_squared", s.weight_square ? to_string(*s.weight_square) : ""},
                       {"W_same_bounds", s.weight && s.weight->holds()},
                       {"W_shifted_ok", s.weight_shifted && s.weight_shifted->holds()}};
    }
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string sandwich_csv(std::span<const SandwichRow> rows, int precision) {
  std::string out = "p,l,lower,F_squared,upper,ok,W_squared,W_same_bounds,W_shifted_ok\n";
  for (const SandwichRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.p, r.l, format_real(r.lower, precision),
                       to_string(r.fib_square), format_real(r.upper, precision),
                       r.fib.holds() ? 1 : 0, r.weight_square ? to_string(*r.weight_square) : "",
                       check_flag(r.weight), check_flag(r.weight_shifted));
  }
  return out;
}

std::vector<DistortionReport> standard_comparison(const ComparisonSetup& setup) {
  const GrayImage cover = synth_noise(setup.cover_seed, setup.width, setup.height, 8);
  const auto message = random_bits(cover.pixel_count(), setup.message_seed);
  const std::vector<NumberSystem> systems{NumberSystem::binary(8), NumberSystem::fibonacci(1, 8),
                                          NumberSystem::fibonacci(2, 8)};
  const std::vector<std::size_t> planes{0, 1, 2, 3, 4, 5, 6, 7};
  return compare(cover, message, planes, systems, setup.traversal_seed);
}

std::vector<std::filesystem::path> write_tables(const std::filesystem::path& out_dir, int precision) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::string& content) {
    written.push_back(out_dir / name);
    write_file(written.back(), content);
  };

  std::vector<AlphaRoot> roots;
  for (int p = 1; p <= 10; ++p) roots.push_back(find_alpha(p));
  emit("roots.csv", roots_csv(roots, precision));

  emit("table1_bounds_p2.csv", bounds_csv(verify_bounds(2, 40), precision));

  constexpr int kMaxOrder = 6;
  constexpr std::size_t kTerms = 60;
  std::vector<RatioSequence> ratios;
  for (int p = 1; p <= kMaxOrder; ++p) ratios.push_back(ratio_sequence(p, kTerms));
  std::string t2 = "n";
  for (int p = 1; p <= kMaxOrder; ++p) t2 += fmt::format(",p{}", p);
  t2 += "\n";
  for (std::size_t n = 0; n < kTerms; ++n) {
    t2 += std::to_string(n);
    for (const RatioSequence& r : ratios) t2 += "," + format_real(r.betas[n], precision);
    t2 += "\n";
  }
  emit("table2_ratios.csv", t2);

  emit("table3_wmse_psnr.csv", compare_csv(standard_comparison(), precision));

  std::vector<SandwichRow> sandwich_rows;
  for (int p = 1; p <= 5; ++p) {
    auto rows = sandwich_table(p, 40);
    sandwich_rows.insert(sandwich_rows.end(), rows.begin(), rows.end());
  }
  emit("sandwich.csv", sandwich_csv(sandwich_rows, precision));
  return written;
}

}  // namespace fibsteg
