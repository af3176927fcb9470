// fibsteg: command-line front end for Fibonacci-p sequences, root and bound
// checks, virtual bit-plane decomposition, embedding, and distortion tables.
//
// Exit codes: 0 success, 1 operation error, 2 flag error. Operation errors
// print one line on stderr:  error: kind=<Kind> message="<text>"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <string>
#include <vector>

#include "fibsteg/fibp.hpp"
#include "fibsteg/imageio.hpp"
#include "fibsteg/metrics.hpp"
#include "fibsteg/numsys.hpp"
#include "fibsteg/prng.hpp"
#include "fibsteg/report.hpp"
#include "fibsteg/stego.hpp"

namespace {

using namespace fibsteg;

struct OperationError : std::runtime_error {
  OperationError(std::string kind, const std::string& what) : std::runtime_error(what), kind(std::move(kind)) {}
  std::string kind;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw OperationError("Io", "cannot write " + out_path);
  f << content;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw OperationError("Io", "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// "0-6" or "0,2,5".
std::vector<std::size_t> parse_planes(const std::string& text) {
  std::vector<std::size_t> planes;
  try {
    for (const std::string& part : split(text, ',')) {
      const auto dash = part.find('-');
      if (dash == std::string::npos) {
        planes.push_back(std::stoul(part));
      } else {
        const auto a = std::stoul(part.substr(0, dash));
        const auto b = std::stoul(part.substr(dash + 1));
        for (auto l = a; l <= b; ++l) planes.push_back(l);
      }
    }
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--planes", "expected a list like 0-6 or 0,2,5");
  }
  return planes;
}

Traversal parse_mode(const std::string& mode) {
  return mode == "permuted" ? Traversal::SeededPermutation : Traversal::Sequential;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci-p number systems and virtual bit-plane steganography"};
  app.require_subcommand(1);

  std::string format = "csv";
  int precision = kDefaultPrecision;
  std::string out = "-";
  double tolerance = kDefaultTolerance;
  int p = 1;
  int n = 10;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", precision, "Decimals for real values")->check(CLI::Range(0, 17));
    cmd->add_option("-o,--out", out, "Output file ('-' for stdout)");
  };

  auto* gen = app.add_subcommand("gen", "Print F_p(0..n)");
  gen->add_option("-p", p, "Order p")->check(CLI::PositiveNumber);
  gen->add_option("-n", n, "Last index")->check(CLI::NonNegativeNumber);
  add_format(gen);

  auto* root = app.add_subcommand("root", "Positive root of x^(p+1) - x^p - 1");
  root->add_option("-p", p, "Order p")->check(CLI::PositiveNumber);
  root->add_option("--tol", tolerance, "Bracket width");
  add_format(root);

  auto* ratios = app.add_subcommand("ratios", "Ratios F_p(n+1)/F_p(n), n = 0..N-1");
  ratios->add_option("-p", p, "Order p")->check(CLI::PositiveNumber);
  ratios->add_option("-n", n, "Number of ratios")->check(CLI::PositiveNumber);
  add_format(ratios);

  auto* bounds = app.add_subcommand("verify-bounds", "Check alpha^(n-p) < F_p(n) < alpha^n and F_p(n) < 2^(n-p)");
  bounds->add_option("-p", p, "Order p")->check(CLI::PositiveNumber);
  bounds->add_option("-n", n, "Largest n")->check(CLI::PositiveNumber);
  bounds->add_option("--tol", tolerance, "Root bracket width");
  add_format(bounds);

  int k_max = 20;
  int p_max = 10;
  auto* lemmas = app.add_subcommand("lemmas", "Check root monotonicity, radical and power chains");
  lemmas->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(2, 200));
  lemmas->add_option("--p-max", p_max, "Largest p for the power chains")->check(CLI::Range(1, 200));
  lemmas->add_option("--tol", tolerance, "Root bracket width");
  add_format(lemmas);

  std::string system_id = "fib1";
  int depth = 8;
  auto* weights = app.add_subcommand("weights", "Weight table of a number system");
  weights->add_option("--system", system_id, "binary or fibP")->required();
  weights->add_option("--depth", depth, "Pixel bit depth")->check(CLI::Range(1, kMaxDepth));
  add_format(weights);

  unsigned value = 0;
  auto* decomp = app.add_subcommand("decompose", "Codeword of a value, bit 0 first");
  decomp->add_option("--system", system_id, "binary or fibP")->required();
  decomp->add_option("--depth", depth, "Pixel bit depth")->check(CLI::Range(1, kMaxDepth));
  decomp->add_option("--value", value, "Value to decompose")->required();
  add_format(decomp);

  std::string cover_path, stego_path, message_path, mode = "sequential", pgm_format = "p5";
  std::size_t plane = 0;
  std::uint64_t seed = 0;
  std::size_t bit_count = 0;
  auto add_embedding = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_id, "binary or fibP")->required();
    cmd->add_option("--plane", plane, "Target (virtual) bit-plane")->required();
    cmd->add_option("--seed", seed, "Traversal seed");
    cmd->add_option("--mode", mode, "Pixel order")->check(CLI::IsMember({"sequential", "permuted"}));
  };

  auto* emb = app.add_subcommand("embed", "Hide message bits in one bit-plane");
  emb->add_option("--cover", cover_path, "Cover PGM ('-' for stdin)")->required();
  emb->add_option("--out", stego_path, "Stego PGM ('-' for stdout)")->required();
  emb->add_option("--message", message_path, "Message file; bits are read MSB-first")->required();
  emb->add_option("--bits", bit_count, "Embed only the first N message bits");
  emb->add_option("--pgm-format", pgm_format, "Output encoding")->check(CLI::IsMember({"p2", "p5"}));
  add_embedding(emb);

  auto* ext = app.add_subcommand("extract", "Recover message bits");
  ext->add_option("--stego", stego_path, "Stego PGM ('-' for stdin)")->required();
  ext->add_option("--count", bit_count, "Number of bits")->required();
  ext->add_option("--out", out, "Bit file, MSB-first, zero-padded ('-' for stdout)");
  add_embedding(ext);

  std::string systems_list = "binary,fib1";
  std::string planes_spec = "0-6";
  std::uint64_t cover_seed = 42;
  std::uint64_t message_seed = 7;
  int width = 64, height = 64;
  auto* cmp = app.add_subcommand("compare", "MSE / WMSE / PSNR per (system, plane)");
  cmp->add_option("--cover", cover_path, "Cover PGM; a seeded-noise cover is synthesized if omitted");
  cmp->add_option("--cover-seed", cover_seed, "Seed of the synthesized cover");
  cmp->add_option("--width", width, "Synthesized cover width")->check(CLI::PositiveNumber);
  cmp->add_option("--height", height, "Synthesized cover height")->check(CLI::PositiveNumber);
  cmp->add_option("--systems", systems_list, "Comma-separated systems");
  cmp->add_option("--planes", planes_spec, "Planes, e.g. 0-6 or 0,2,5");
  cmp->add_option("--message", message_path, "Message file; random bits if omitted");
  cmp->add_option("--message-seed", message_seed, "Seed of the random message (one bit per pixel)");
  cmp->add_option("--seed", seed, "Traversal seed");
  add_format(cmp);

  std::string out_dir = "tables";
  auto* tables = app.add_subcommand("tables", "Regenerate all reproduction tables as CSV");
  tables->add_option("--out-dir", out_dir, "Output directory");
  tables->add_option("--precision", precision, "Decimals for real values")->check(CLI::Range(0, 17));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << fmt::format("error: kind=FlagError message=\"{}\"\n", e.what());
    return 2;
  }

  const bool json = format == "json";
  try {
    if (*gen) {
      const PSequence seq = generate_sequence(p, static_cast<std::size_t>(n));
      if (json) {
        nlohmann::json j{{"p", p}, {"terms", nlohmann::json::array()}};
        for (const auto& t : seq.terms) j["terms"].push_back(to_string(t));
        emit(out, j.dump(2) + "\n");
      } else {
        std::string line;
        for (std::size_t i = 0; i < seq.size(); ++i) line += (i ? " " : "") + to_string(seq.terms[i]);
        emit(out, line + "\n");
      }
    } else if (*root) {
      const AlphaRoot r = find_alpha(p, tolerance);
      if (json) {
        nlohmann::json j{{"p", r.p},
                         {"alpha", format_real(r.value, precision)},
                         {"bracket_lo", fmt::format("{:.17g}", r.bracket_lo)},
                         {"bracket_hi", fmt::format("{:.17g}", r.bracket_hi)},
                         {"tolerance", fmt::format("{:g}", r.tolerance)}};
        emit(out, j.dump(2) + "\n");
      } else {
        emit(out, format_real(r.value, precision) + "\n");
      }
    } else if (*ratios) {
      const RatioSequence rs = ratio_sequence(p, static_cast<std::size_t>(n));
      emit(out, json ? ratios_json(rs, precision) : ratios_csv(rs, precision));
    } else if (*bounds) {
      const BoundReport rep = verify_bounds(p, n, tolerance);
      emit(out, json ? bounds_json(rep, precision) : bounds_csv(rep, precision));
      if (!rep.violations.empty()) {
        throw OperationError("BoundViolation", fmt::format("{} violated row(s)", rep.violations.size()));
      }
      if (!rep.undecided.empty()) {
        throw OperationError("Undecided",
                             fmt::format("{} row(s) undecided; tighten --tol", rep.undecided.size()));
      }
    } else if (*lemmas) {
      const auto l3 = check_lemma3(k_max, tolerance);
      const Lemma4Report l4 = check_lemma4(k_max, p_max, tolerance);
      emit(out, json ? lemmas_json(l3, l4, precision) : lemma3_csv(l3, precision) + lemma4_csv(l4, precision));
      bool ok = l4.passed();
      for (const auto& r : l3) ok = ok && r.passed();
      if (!ok) throw OperationError("LemmaFailure", "at least one check failed");
    } else if (*weights) {
      const NumberSystem sys = NumberSystem::parse(system_id, depth);
      emit(out, json ? weights_json(sys) : weights_csv(sys));
    } else if (*decomp) {
      const NumberSystem sys = NumberSystem::parse(system_id, depth);
      const Codeword word = decompose(sys, value);
      if (json) {
        nlohmann::json j{{"system", sys.id()}, {"value", value}, {"bits", render_bits(word.bits)}};
        emit(out, j.dump(2) + "\n");
      } else {
        emit(out, render_bits(word.bits) + "\n");
      }
    } else if (*emb) {
      const GrayImage cover = read_pgm_file(cover_path);
      BitStream message = bytes_to_bits(read_bytes(message_path));
      if (bit_count > 0) {
        if (bit_count > message.size()) throw OperationError("InvalidArgument", "--bits exceeds message length");
        message.resize(bit_count);
      }
      const EmbedConfig cfg{NumberSystem::parse(system_id, cover.depth()), plane, seed, parse_mode(mode)};
      const StegoResult res = embed(cover, message, cfg);
      write_pgm_file(res.stego_image, stego_path, pgm_format == "p2" ? PgmFormat::P2 : PgmFormat::P5);
      auto& log = stego_path == "-" ? std::cerr : std::cout;
      log << fmt::format("embedded={} skipped_pixels={} capacity_ratio={}\n", res.embedded_count,
                         res.skipped_pixels, format_real(res.capacity_ratio, precision));
    } else if (*ext) {
      const GrayImage stego = read_pgm_file(stego_path);
      const EmbedConfig cfg{NumberSystem::parse(system_id, stego.depth()), plane, seed, parse_mode(mode)};
      const BitStream bits = extract(stego, bit_count, cfg);
      const auto bytes = bits_to_bytes(bits);
      emit(out, std::string(bytes.begin(), bytes.end()));
    } else if (*cmp) {
      const GrayImage cover = cover_path.empty() ? synth_noise(cover_seed, width, height, 8) : read_pgm_file(cover_path);
      const BitStream message = message_path.empty() ? random_bits(cover.pixel_count(), message_seed)
                                                     : bytes_to_bits(read_bytes(message_path));
      std::vector<NumberSystem> systems;
      for (const std::string& id : split(systems_list, ',')) systems.push_back(NumberSystem::parse(id, cover.depth()));
      const auto planes = parse_planes(planes_spec);
      const auto rows = compare(cover, message, planes, systems, seed);
      emit(out, json ? compare_json(rows, precision) : compare_csv(rows, precision));
      for (const auto& r : rows) {
        if (r.error) std::cerr << fmt::format("warning: {} plane {}: {}\n", r.system, r.plane, *r.error);
      }
    } else if (*tables) {
      for (const auto& path : write_tables(out_dir, precision)) std::cout << path.string() << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << fmt::format("error: kind=FlagError message=\"{}\"\n", e.what());
    return 2;
  } catch (const OperationError& e) {
    std::cerr << fmt::format("error: kind={} message=\"{}\"\n", e.kind, e.what());
    return 1;
  } catch (const CapacityExceeded& e) {
    std::cerr << fmt::format("error: kind=CapacityExceeded message=\"{}\"\n", e.what());
    return 1;
  } catch (const PgmError& e) {
    std::cerr << fmt::format("error: kind={} message=\"{}\"\n", to_string(e.kind()), e.what());
    return 1;
  } catch (const DimensionMismatch& e) {
    std::cerr << fmt::format("error: kind=DimensionMismatch message=\"{}\"\n", e.what());
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << fmt::format("error: kind=OutOfRange message=\"{}\"\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << fmt::format("error: kind=InvalidArgument message=\"{}\"\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::cerr << fmt::format("error: kind=Internal message=\"{}\"\n", e.what());
    return 1;
  }
  return 0;
}
