#include "fibsteg/stego.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "fibsteg/prng.hpp"

namespace fibsteg {

CapacityExceeded::CapacityExceeded(std::size_t required, std::size_t available)
    : std::runtime_error("CapacityExceeded: need " + std::to_string(required) + " carrier pixels, have " +
                         std::to_string(available)),
      required_(required),
      available_(available) {}

CapacityExceeded::CapacityExceeded(std::size_t required, std::size_t available, StegoResult partial)
    : CapacityExceeded(required, available) {
  partial_ = std::move(partial);
}

namespace {

// Codeword with bit `plane` forced to `bit`, if that codeword is legal.
std::optional<std::uint32_t> with_bit(const NumberSystem& system, const Codeword& word, std::size_t plane,
                                      std::uint8_t bit) {
  auto bits = word.bits;
  bits[plane] = bit;
  if (!is_valid(system, bits)) return std::nullopt;
  return static_cast<std::uint32_t>(recompose(system, bits));
}

// Per-value lookup for one (system, plane): whether the value carries a bit,
// the bit it currently holds, and its value with the bit set to 0 and to 1.
struct PlaneTable {
  std::vector<std::uint8_t> carrier;
  std::vector<std::uint8_t> bit;
  std::vector<std::uint32_t> as_zero;
  std::vector<std::uint32_t> as_one;

  PlaneTable(const NumberSystem& system, std::size_t plane) {
    const std::size_t n = std::size_t{system.max_value()} + 1;
    carrier.resize(n);
    bit.resize(n);
    as_zero.resize(n);
    as_one.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      const Codeword word = decompose(system, v);
      bit[v] = word.bits[plane];
      const auto zero = with_bit(system, word, plane, 0);
      const auto one = with_bit(system, word, plane, 1);
      carrier[v] = zero && one;
      as_zero[v] = zero.value_or(v);
      as_one[v] = one.value_or(v);
    }
  }
};

void validate(const GrayImage& image, const EmbedConfig& cfg) {
  if (cfg.plane >= cfg.system.planes()) {
    throw std::invalid_argument("plane " + std::to_string(cfg.plane) + " out of range for " + cfg.system.id() +
                                " (" + std::to_string(cfg.system.planes()) + " planes)");
  }
  if (cfg.system.depth() != image.depth()) {
    throw std::invalid_argument("number system depth " + std::to_string(cfg.system.depth()) +
                                " != image depth " + std::to_string(image.depth()));
  }
}

}  // namespace

bool eligible(const NumberSystem& system, std::uint32_t v, std::size_t plane) {
  if (plane >= system.planes()) return false;
  const Codeword word = decompose(system, v);
  return with_bit(system, word, plane, 0).has_value() && with_bit(system, word, plane, 1).has_value();
}

std::vector<std::size_t> traversal_order(std::size_t pixel_count, const EmbedConfig& cfg) {
  if (cfg.mode == Traversal::SeededPermutation) return seeded_permutation(pixel_count, cfg.seed);
  std::vector<std::size_t> order(pixel_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

std::size_t capacity(const GrayImage& cover, const EmbedConfig& cfg) {
  validate(cover, cfg);
  const PlaneTable table(cfg.system, cfg.plane);
  std::size_t count = 0;
  for (Sample s : cover.samples()) count += table.carrier[s];
  return count;
}

StegoResult embed(const GrayImage& cover, std::span<const std::uint8_t> message, const EmbedConfig& cfg) {
  validate(cover, cfg);
  if (message.empty()) throw std::invalid_argument("message is empty");
  for (auto b : message) {
    if (b > 1) throw std::invalid_argument("message bits must be 0 or 1");
  }
  const PlaneTable table(cfg.system, cfg.plane);
  std::vector<Sample> out(cover.samples().begin(), cover.samples().end());

  std::size_t next = 0;
  for (std::size_t idx : traversal_order(out.size(), cfg)) {
    if (next == message.size()) break;
    const Sample v = out[idx];
    if (!table.carrier[v]) continue;
    out[idx] = static_cast<Sample>(message[next] ? table.as_one[v] : table.as_zero[v]);
    ++next;
  }

  std::size_t skipped = 0;
  for (Sample s : cover.samples()) skipped += table.carrier[s] ? 0 : 1;

  StegoResult result{GrayImage(cover.width(), cover.height(), cover.depth(), std::move(out)), next, skipped,
                     static_cast<double>(next) / static_cast<double>(cover.pixel_count())};
  if (next < message.size()) throw CapacityExceeded(message.size(), next, std::move(result));
  return result;
}

BitStream extract(const GrayImage& stego, std::size_t count, const EmbedConfig& cfg) {
  validate(stego, cfg);
  const PlaneTable table(cfg.system, cfg.plane);
  BitStream bits;
  bits.reserve(count);
  const auto samples = stego.samples();
  for (std::size_t idx : traversal_order(samples.size(), cfg)) {
    if (bits.size() == count) break;
    const Sample v = samples[idx];
    if (table.carrier[v]) bits.push_back(table.bit[v]);
  }
  if (bits.size() < count) throw CapacityExceeded(count, bits.size());
  return bits;
}

BitStream bytes_to_bits(std::span<const std::uint8_t> bytes) {
  BitStream bits;
  bits.reserve(bytes.size() * 8);
  for (auto byte : bytes) {
    for (int i = 7; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((byte >> i) & 1));
  }
  return bits;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  }
  return bytes;
}

}  // namespace fibsteg
