#include "fibsteg/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fibsteg {

std::string to_string(const BigInt& value) { return value.str(); }

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num <= 0 || den <= 0) {
    throw std::invalid_argument("ratio_to_double: operands must be positive");
  }
  const long num_bits = static_cast<long>(boost::multiprecision::msb(num));
  const long den_bits = static_cast<long>(boost::multiprecision::msb(den));
  // Scale so the integer quotient carries 63..64 significant bits.
  const long shift = 63 - (num_bits - den_bits);
  BigInt q = shift >= 0 ? BigInt(num << shift) / den : BigInt(num >> -shift) / den;
  // q < 2^65; fold to 64 bits, keeping a sticky bit so rounding stays honest.
  int extra = 0;
  while (q >> 64 != 0) {
    const bool sticky = (q & 1) != 0;
    q >>= 1;
    if (sticky) q |= 1;
    ++extra;
  }
  const auto top = static_cast<std::uint64_t>(q);
  return std::ldexp(static_cast<double>(top), static_cast<int>(extra - shift));
}

}  // namespace fibsteg
