#include "fibsteg/imageio.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string_view>
#include <utility>

#include "fibsteg/prng.hpp"

namespace fibsteg {

GrayImage::GrayImage(int width, int height, int depth, std::vector<Sample> samples)
    : width_(width), height_(height), depth_(depth), samples_(std::move(samples)) {
  if (width_ <= 0 || height_ <= 0) throw std::invalid_argument("image dimensions must be positive");
  if (depth_ != 8 && depth_ != 16) throw std::invalid_argument("image depth must be 8 or 16");
  if (samples_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
    throw std::invalid_argument("sample count does not match width*height");
  }
  for (Sample s : samples_) {
    if (s > max_value()) throw std::invalid_argument("sample exceeds 2^depth - 1");
  }
}

PgmError::PgmError(Kind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

const char* to_string(PgmError::Kind kind) {
  switch (kind) {
    case PgmError::Kind::MalformedHeader:
      return "MalformedHeader";
    case PgmError::Kind::TruncatedData:
      return "TruncatedData";
    case PgmError::Kind::UnsupportedMaxval:
      return "UnsupportedMaxval";
    case PgmError::Kind::SampleOutOfRange:
      return "SampleOutOfRange";
  }
  return "?";
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Unsigned decimal token; nullopt at end of input or on a non-digit.
  std::optional<std::uint64_t> number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) return std::nullopt;
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > 0xFFFFFFFFULL) return std::nullopt;
      ++pos_;
    }
    return v;
  }

  bool at_end() const { return pos_ >= bytes_.size(); }
  std::uint8_t peek() const { return bytes_[pos_]; }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint64_t header_field(Scanner& in, const char* name) {
  const auto v = in.number();
  if (!v) throw PgmError(PgmError::Kind::MalformedHeader, std::string("missing or invalid ") + name);
  return *v;
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmError(PgmError::Kind::MalformedHeader, "expected magic P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  Scanner in(bytes.subspan(2));
  if (in.at_end() || !(std::isspace(in.peek()) || in.peek() == '#')) {
    throw PgmError(PgmError::Kind::MalformedHeader, "magic must be followed by whitespace");
  }

  const auto width = header_field(in, "width");
  const auto height = header_field(in, "height");
  const auto maxval = header_field(in, "maxval");
  if (width == 0 || height == 0 || width > 0x7FFFFFFF || height > 0x7FFFFFFF) {
    throw PgmError(PgmError::Kind::MalformedHeader, "dimensions must be positive");
  }
  if (maxval == 0 || maxval > 65535) {
    throw PgmError(PgmError::Kind::UnsupportedMaxval, "maxval " + std::to_string(maxval));
  }
  const int depth = maxval <= 255 ? 8 : 16;
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<Sample> samples;
  samples.reserve(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (in.at_end() || !std::isspace(in.peek())) {
      throw PgmError(PgmError::Kind::MalformedHeader, "missing whitespace before raster");
    }
    in.advance();
    const std::size_t bytes_per = depth == 8 ? 1 : 2;
    if (in.remaining() < count * bytes_per) {
      throw PgmError(PgmError::Kind::TruncatedData, "raster has " + std::to_string(in.remaining()) +
                                                        " bytes, need " + std::to_string(count * bytes_per));
    }
    const auto raster = in.rest();
    for (std::size_t i = 0; i < count; ++i) {
      const Sample s = bytes_per == 1 ? raster[i]
                                      : static_cast<Sample>((raster[2 * i] << 8) | raster[2 * i + 1]);
      samples.push_back(s);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      in.skip_space_and_comments();
      if (in.at_end()) {
        throw PgmError(PgmError::Kind::TruncatedData,
                       "expected " + std::to_string(count) + " samples, got " + std::to_string(i));
      }
      const auto v = in.number();
      if (!v) throw PgmError(PgmError::Kind::MalformedHeader, "non-numeric sample");
      if (*v > maxval) {
        throw PgmError(PgmError::Kind::SampleOutOfRange, "sample " + std::to_string(*v));
      }
      samples.push_back(static_cast<Sample>(*v));
    }
  }
  for (Sample s : samples) {
    if (s > maxval) throw PgmError(PgmError::Kind::SampleOutOfRange, "sample " + std::to_string(s));
  }
  return {static_cast<int>(width), static_cast<int>(height), depth, std::move(samples)};
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image, PgmFormat format) {
  const bool binary = format == PgmFormat::P5;
  const std::string header = std::string(binary ? "P5 " : "P2 ") + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + " " + std::to_string(image.max_value()) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto samples = image.samples();
  if (binary) {
    for (Sample s : samples) {
      if (image.depth() == 16) out.push_back(static_cast<std::uint8_t>(s >> 8));
      out.push_back(static_cast<std::uint8_t>(s & 0xFF));
    }
    return out;
  }
  std::string text;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (x > 0) text += ' ';
      text += std::to_string(image.at(x, y));
    }
    text += '\n';
  }
  out.insert(out.end(), text.begin(), text.end());
  return out;
}

GrayImage read_pgm_file(const std::string& path) {
  std::vector<std::uint8_t> bytes;
  if (path == "-") {
    bytes.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  return read_pgm(bytes);
}

void write_pgm_file(const GrayImage& image, const std::string& path, PgmFormat format) {
  const auto bytes = write_pgm(image, format);
  if (path == "-") {
    std::cout.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

GrayImage synth_constant(Sample value, int width, int height, int depth) {
  return {width, height, depth,
          std::vector<Sample>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), value)};
}

GrayImage synth_gradient(int width, int height, int depth) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("image dimensions must be positive");
  const std::uint64_t maxval = (std::uint64_t{1} << depth) - 1;
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      samples.push_back(width == 1 ? Sample{0} : static_cast<Sample>(x * maxval / (width - 1)));
    }
  }
  return {width, height, depth, std::move(samples)};
}

GrayImage synth_noise(std::uint64_t seed, int width, int height, int depth) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("image dimensions must be positive");
  if (depth != 8 && depth != 16) throw std::invalid_argument("image depth must be 8 or 16");
  SplitMix64 rng(seed);
  std::vector<Sample> samples(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (auto& s : samples) s = static_cast<Sample>(rng.next() >> (64 - depth));
  return {width, height, depth, std::move(samples)};
}

}  // namespace fibsteg
