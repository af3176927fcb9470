#include "fibsteg/numsys.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include "fibsteg/fibp.hpp"

namespace fibsteg {

namespace {

void require_depth(int depth) {
  if (depth < 1 || depth > kMaxDepth) {
    throw std::invalid_argument("bit depth must lie in 1..16, got " + std::to_string(depth));
  }
}

}  // namespace

NumberSystem::NumberSystem(SystemKind kind, int order, int depth, std::vector<std::uint32_t> weights)
    : kind_(kind),
      order_(order),
      depth_(depth),
      weights_(std::make_shared<const std::vector<std::uint32_t>>(std::move(weights))) {}

NumberSystem NumberSystem::binary(int depth) {
  require_depth(depth);
  std::vector<std::uint32_t> w;
  for (int i = 0; i < depth; ++i) w.push_back(std::uint32_t{1} << i);
  return {SystemKind::Binary, 0, depth, std::move(w)};
}

NumberSystem NumberSystem::fibonacci(int p, int depth) {
  require_depth(depth);
  if (p < 1) throw std::invalid_argument("Fibonacci-p order must be >= 1");
  const std::uint64_t max_value = (std::uint64_t{1} << depth) - 1;
  // Greedy codewords over W(0..m-1) cover exactly 0..W(m)-1, so m is the
  // first index whose weight exceeds the largest pixel value.
  std::vector<std::uint32_t> w;
  std::size_t n_max = static_cast<std::size_t>(p) + 32;
  for (;;) {
    const PSequence seq = generate_sequence(p, n_max);
    w.clear();
    bool covered = false;
    for (std::size_t n = static_cast<std::size_t>(p); n < seq.size(); ++n) {
      if (seq.terms[n] > max_value) {
        covered = true;
        break;
      }
      w.push_back(static_cast<std::uint32_t>(seq.terms[n]));
    }
    if (covered) break;
    n_max *= 2;
  }
  return {SystemKind::FibonacciP, p, depth, std::move(w)};
}

NumberSystem NumberSystem::parse(std::string_view id, int depth) {
  if (id == "binary") return binary(depth);
  if (id.starts_with("fib")) {
    const std::string_view digits = id.substr(3);
    int p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return fibonacci(p, depth);
    }
  }
  throw std::invalid_argument("unknown number system '" + std::string(id) + "' (expected binary or fibP)");
}

std::string NumberSystem::id() const {
  return kind_ == SystemKind::Binary ? std::string("binary") : "fib" + std::to_string(order_);
}

NumberSystem build_system(SystemKind kind, int depth, int p) {
  return kind == SystemKind::Binary ? NumberSystem::binary(depth) : NumberSystem::fibonacci(p, depth);
}

Codeword decompose(const NumberSystem& system, std::uint32_t v) {
  if (v > system.max_value()) {
    throw std::out_of_range("value " + std::to_string(v) + " exceeds " + std::to_string(system.max_value()));
  }
  Codeword word{system, std::vector<std::uint8_t>(system.planes(), 0)};
  const auto w = system.weights();
  std::uint32_t rest = v;
  for (std::size_t i = w.size(); i-- > 0 && rest > 0;) {
    if (w[i] <= rest) {
      word.bits[i] = 1;
      rest -= w[i];
    }
  }
  return word;
}

std::uint64_t recompose(const NumberSystem& system, std::span<const std::uint8_t> bits) {
  const auto w = system.weights();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < bits.size() && i < w.size(); ++i) {
    if (bits[i]) sum += w[i];
  }
  return sum;
}

std::uint64_t recompose(const Codeword& word) { return recompose(word.system, word.bits); }

bool is_valid(const NumberSystem& system, std::span<const std::uint8_t> bits) {
  if (bits.size() != system.planes()) {
    throw std::invalid_argument("codeword length " + std::to_string(bits.size()) + " != " +
                                std::to_string(system.planes()) + " planes");
  }
  const auto gap = static_cast<std::size_t>(system.gap());
  std::size_t last = 0;
  bool seen = false;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    if (seen && i - last < gap) return false;
    last = i;
    seen = true;
  }
  return recompose(system, bits) <= system.max_value();
}

std::string render_bits(std::span<const std::uint8_t> bits) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i > 0 && i % 4 == 0) out += ' ';
    out += bits[i] ? '1' : '0';
  }
  return out;
}

}  // namespace fibsteg
