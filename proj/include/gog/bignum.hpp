#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gog {

/// Exact nonnegative counts (and signed intermediates in the inclusion-exclusion sums).
using BigCount = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// Natural log of a positive big integer without overflowing a double.
inline double log_big(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  const unsigned bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 64;
  BigInt head = v >> shift;
  return std::log(head.convert_to<double>()) + shift * std::log(2.0);
}

/// Decimal rendering with `digits` significant digits, e.g. "1.07142857143".
/// Computed from the exact fraction, so it is reproducible across platforms.
inline std::string to_decimal(const BigRational& q, int digits = 12) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (num == 0) return "0";
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  // Find exponent e with 10^e <= num/den < 10^(e+1).
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto ge_pow10 = [&](int k) {
    // num/den >= 10^k
    if (k >= 0) return num >= den * pow(BigInt(10), static_cast<unsigned>(k));
    return num * pow(BigInt(10), static_cast<unsigned>(-k)) >= den;
  };
  while (!ge_pow10(e)) --e;
  while (ge_pow10(e + 1)) ++e;
  const int scale = digits - 1 - e;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (scale >= 0)
    scaled_num *= pow(BigInt(10), static_cast<unsigned>(scale));
  else
    scaled_den *= pow(BigInt(10), static_cast<unsigned>(-scale));
  BigInt quot = scaled_num / scaled_den;
  const BigInt rem = scaled_num % scaled_den;
  if (rem * 2 >= scaled_den) ++quot;  // round half up
  std::string mant = quot.str();
  int exp10 = e;
  if (static_cast<int>(mant.size()) > digits) {  // rounding carried into a new digit
    mant.pop_back();
    ++exp10;
  }
  // Place the decimal point: value = mant * 10^(exp10 - digits + 1).
  std::string out;
  if (exp10 >= 0 && exp10 < 21) {
    if (exp10 + 1 >= static_cast<int>(mant.size())) {
      out = mant + std::string(exp10 + 1 - mant.size(), '0');
    } else {
      out = mant.substr(0, exp10 + 1) + "." + mant.substr(exp10 + 1);
    }
  } else if (exp10 < 0 && exp10 > -7) {
    out = "0." + std::string(-exp10 - 1, '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp10);
  }
  // Trim trailing zeros after a decimal point (mantissa part only).
  const auto epos = out.find('e');
  std::string body = out.substr(0, epos);
  const std::string tail = epos == std::string::npos ? "" : out.substr(epos);
  if (body.find('.') != std::string::npos) {
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  return sign + body + tail;
}

/// Uniform integer in [0, bound) by rejection on msb(bound)+1 random bits.
/// Only the 64-bit Mersenne Twister output stream is consumed, so results are
/// identical on every platform for a given seed.
inline BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  for (;;) {
    BigInt v = 0;
    unsigned filled = 0;
    while (filled < bits) {
      v <<= 64;
      v += rng();
      filled += 64;
    }
    v >>= (filled - bits);
    if (v < bound) return v;
  }
}

}  // namespace gog
