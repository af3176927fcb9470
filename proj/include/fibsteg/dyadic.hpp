#pragma once

#include <compare>

#include "fibsteg/bigint.hpp"

namespace fibsteg {

/// Exact binary rational mantissa * 2^exponent.
///
/// Every finite double is a dyadic, so bracket endpoints produced by a
/// floating-point root finder can be raised to integer powers and compared
/// against exact integers with no rounding at all.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, long exponent);
  explicit Dyadic(const BigInt& integer) : Dyadic(integer, 0) {}

  static Dyadic from_double(double x);

  const BigInt& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }

  Dyadic pow(unsigned k) const;
  double to_double() const;
  int sign() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  void normalize();

  BigInt mantissa_{0};
  long exponent_{0};
};

}  // namespace fibsteg
