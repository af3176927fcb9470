#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibsteg {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

/// Converts num/den (both positive) to the nearest double, up to one rounding
/// of a 64-bit quotient. Deterministic across platforms: only integer division
/// and an exact ldexp are involved.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace fibsteg
