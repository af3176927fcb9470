#pragma once

// Positional number systems used to slice pixel values into (virtual)
// bit-planes: classical binary, and Fibonacci-p with weights W(i) = F_p(i+p).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibsteg {

inline constexpr int kMaxDepth = 16;

enum class SystemKind { Binary, FibonacciP };

class NumberSystem {
 public:
  /// Throws std::invalid_argument for depth outside 1..16.
  static NumberSystem binary(int depth);
  /// Throws std::invalid_argument for p < 1 or depth outside 1..16.
  static NumberSystem fibonacci(int p, int depth);
  /// "binary" or "fibP" (e.g. "fib1", "fib2").
  static NumberSystem parse(std::string_view id, int depth);

  SystemKind kind() const { return kind_; }
  int order() const { return order_; }  // p, or 0 for binary
  int depth() const { return depth_; }
  std::uint32_t max_value() const { return (std::uint32_t{1} << depth_) - 1; }

  /// Minimal index distance between two set bits of a legal codeword.
  int gap() const { return kind_ == SystemKind::Binary ? 1 : order_ + 1; }

  std::span<const std::uint32_t> weights() const { return *weights_; }
  std::uint32_t weight(std::size_t i) const { return weights_->at(i); }
  std::size_t planes() const { return weights_->size(); }

  std::string id() const;

  friend bool operator==(const NumberSystem& a, const NumberSystem& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_ && a.depth_ == b.depth_;
  }

 private:
  NumberSystem(SystemKind kind, int order, int depth, std::vector<std::uint32_t> weights);

  SystemKind kind_;
  int order_;
  int depth_;
  std::shared_ptr<const std::vector<std::uint32_t>> weights_;
};

/// Codeword over a system's planes; bits[i] multiplies W(i).
struct Codeword {
  NumberSystem system;
  std::vector<std::uint8_t> bits;
};

NumberSystem build_system(SystemKind kind, int depth, int p = 0);

/// Greedy representation: repeatedly take the largest W(i) <= remainder.
/// Throws std::out_of_range for v > system.max_value().
Codeword decompose(const NumberSystem& system, std::uint32_t v);

/// Sum of bits[i] * W(i).
std::uint64_t recompose(const Codeword& word);
std::uint64_t recompose(const NumberSystem& system, std::span<const std::uint8_t> bits);

/// True iff set bits respect the gap rule and the value fits the pixel depth.
/// Throws std::invalid_argument if bits.size() != planes().
bool is_valid(const NumberSystem& system, std::span<const std::uint8_t> bits);

/// MSB-last rendering, bit 0 first, grouped in fours: "0100 1000 0000".
std::string render_bits(std::span<const std::uint8_t> bits);

}  // namespace fibsteg
