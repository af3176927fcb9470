#pragma once

// Embedding and extraction of secret bits in one (virtual) bit-plane of a
// grayscale image, under a chosen number system.
//
// A pixel carries a bit only if its codeword stays legal with the target bit
// forced to 0 and to 1. Flipping that bit keeps the pixel eligible, so the
// extractor finds the same carriers without side information.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fibsteg/imageio.hpp"
#include "fibsteg/numsys.hpp"

namespace fibsteg {

using BitStream = std::vector<std::uint8_t>;  // one 0/1 per element

enum class Traversal { Sequential, SeededPermutation };

struct EmbedConfig {
  NumberSystem system;
  std::size_t plane = 0;
  std::uint64_t seed = 0;
  Traversal mode = Traversal::Sequential;
};

struct StegoResult {
  GrayImage stego_image;
  std::size_t embedded_count = 0;
  std::size_t skipped_pixels = 0;  // ineligible pixels in the whole image
  double capacity_ratio = 0.0;     // embedded_count / pixel_count
};

class CapacityExceeded : public std::runtime_error {
 public:
  CapacityExceeded(std::size_t required, std::size_t available);
  CapacityExceeded(std::size_t required, std::size_t available, StegoResult partial);

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }
  /// Set when thrown by embed: the image with every eligible pixel used.
  const std::optional<StegoResult>& partial() const { return partial_; }

 private:
  std::size_t required_;
  std::size_t available_;
  std::optional<StegoResult> partial_;
};

bool eligible(const NumberSystem& system, std::uint32_t v, std::size_t plane);

/// Pixel indices in visiting order for an image of pixel_count samples.
std::vector<std::size_t> traversal_order(std::size_t pixel_count, const EmbedConfig& cfg);

/// Number of eligible pixels, i.e. the most bits embed can place.
std::size_t capacity(const GrayImage& cover, const EmbedConfig& cfg);

/// Throws std::invalid_argument on an empty message, non-0/1 bits, plane >= m,
/// or a system depth different from the image depth; CapacityExceeded when
/// message bits remain after the full traversal.
StegoResult embed(const GrayImage& cover, std::span<const std::uint8_t> message, const EmbedConfig& cfg);

/// Throws CapacityExceeded if fewer than count eligible pixels exist.
BitStream extract(const GrayImage& stego, std::size_t count, const EmbedConfig& cfg);

/// MSB-first packing helpers for message files.
BitStream bytes_to_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

}  // namespace fibsteg
