#include "simcount/bigint.hpp"

namespace simcount {

std::string to_fixed(const BigRat& v, unsigned digits) {
  BigCount num = boost::multiprecision::numerator(v);
  const BigCount den = boost::multiprecision::denominator(v);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigCount whole = num / den;
  BigCount rem = num % den;
  std::string s = sign + whole.str();
  if (digits == 0) return s;
  s += ".";
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    s += BigCount(rem / den).str();
    rem %= den;
  }
  return s;
}

}  // namespace simcount
