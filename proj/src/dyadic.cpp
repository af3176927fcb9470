#include "fibsteg/dyadic.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace fibsteg {

Dyadic::Dyadic(BigInt mantissa, long exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto low = static_cast<long>(boost::multiprecision::lsb(abs(mantissa_)));
  if (low > 0) {
    mantissa_ >>= low;
    exponent_ += low;
  }
}

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Dyadic::from_double: non-finite input");
  if (x == 0.0) return {};
  int exp = 0;
  const double frac = std::frexp(x, &exp);  // |frac| in [0.5, 1)
  const auto scaled = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return {BigInt(scaled), static_cast<long>(exp) - 53};
}

Dyadic Dyadic::pow(unsigned k) const {
  BigInt m = boost::multiprecision::pow(mantissa_, k);
  return {std::move(m), exponent_ * static_cast<long>(k)};
}

double Dyadic::to_double() const {
  if (mantissa_ == 0) return 0.0;
  const BigInt mag = abs(mantissa_);
  const long bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
  double d = 0.0;
  long exp = exponent_;
  if (bits > 64) {
    d = static_cast<double>(static_cast<std::uint64_t>(mag >> (bits - 64)));
    exp += bits - 64;
  } else {
    d = static_cast<double>(static_cast<std::uint64_t>(mag));
  }
  d = std::ldexp(d, static_cast<int>(exp));
  return mantissa_ < 0 ? -d : d;
}

int Dyadic::sign() const { return mantissa_ > 0 ? 1 : (mantissa_ < 0 ? -1 : 0); }

namespace {

// Brings both operands to the smaller exponent; returns that exponent.
long align(const Dyadic& a, const Dyadic& b, BigInt& ma, BigInt& mb) {
  const long e = std::min(a.exponent(), b.exponent());
  ma = a.mantissa() << (a.exponent() - e);
  mb = b.mantissa() << (b.exponent() - e);
  return e;
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  BigInt ma, mb;
  const long e = align(a, b, ma, mb);
  return {ma + mb, e};
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  BigInt ma, mb;
  const long e = align(a, b, ma, mb);
  return {ma - mb, e};
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return {a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_};
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  BigInt ma, mb;
  align(a, b, ma, mb);
  if (ma < mb) return std::strong_ordering::less;
  if (ma > mb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace fibsteg
