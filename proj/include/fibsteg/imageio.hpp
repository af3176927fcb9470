#pragma once

// Grayscale images, PGM (P2/P5) serialization, and deterministic synthetic covers.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibsteg {

using Sample = std::uint16_t;

class GrayImage {
 public:
  /// Throws std::invalid_argument on zero dimensions, depth other than 8 or 16,
  /// size mismatch, or any sample above 2^depth - 1.
  GrayImage(int width, int height, int depth, std::vector<Sample> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  int depth() const { return depth_; }
  std::uint32_t max_value() const { return (std::uint32_t{1} << depth_) - 1; }
  std::size_t pixel_count() const { return samples_.size(); }

  std::span<const Sample> samples() const { return samples_; }
  Sample at(int x, int y) const { return samples_.at(static_cast<std::size_t>(y) * width_ + x); }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_;
  int height_;
  int depth_;
  std::vector<Sample> samples_;
};

class PgmError : public std::runtime_error {
 public:
  enum class Kind { MalformedHeader, TruncatedData, UnsupportedMaxval, SampleOutOfRange };

  PgmError(Kind kind, const std::string& what);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(PgmError::Kind kind);

enum class PgmFormat { P2, P5 };

/// Parses P2 or P5. maxval <= 255 maps to depth 8, otherwise depth 16;
/// 16-bit P5 samples are big-endian. '#' comments are skipped in the header.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical form: "P5 W H MAXVAL\n" then the raster (maxval = 2^depth - 1).
/// P2 writes one image row per line.
std::vector<std::uint8_t> write_pgm(const GrayImage& image, PgmFormat format = PgmFormat::P5);

GrayImage read_pgm_file(const std::string& path);  // "-" reads stdin
void write_pgm_file(const GrayImage& image, const std::string& path, PgmFormat format = PgmFormat::P5);

// Synthetic covers ----------------------------------------------------------

GrayImage synth_constant(Sample value, int width, int height, int depth = 8);

/// Horizontal ramp: sample(x, y) = x * maxval / (width - 1), or 0 when width is 1.
GrayImage synth_gradient(int width, int height, int depth = 8);

/// Row-major samples, each SplitMix64(seed).next() >> (64 - depth).
GrayImage synth_noise(std::uint64_t seed, int width, int height, int depth = 8);

}  // namespace fibsteg
