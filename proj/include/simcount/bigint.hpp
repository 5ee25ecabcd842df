#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace simcount {

// Exact counts. Never rounded, never floated; serialized as decimal strings.
using BigCount = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigCount big_pow(const BigCount& base, std::uint64_t exp) {
  BigCount r = 1;
  BigCount b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline std::string decimal(const BigCount& v) { return v.str(); }

inline std::string decimal(const BigRat& v) {
  BigCount num = boost::multiprecision::numerator(v);
  BigCount den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Decimal expansion of a rational to `digits` places, truncated, for display.
std::string to_fixed(const BigRat& v, unsigned digits);

}  // namespace simcount
