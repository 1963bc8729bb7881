#pragma once

#include <boost/rational.hpp>

#include <cstdio>
#include <string>

namespace deptree {

/// Exact arithmetic for every statistic in the library. All magnitudes here
/// are polynomial in the sentence length n, far below 2^63, so 64-bit
/// numerator and denominator are plenty.
using Rational = boost::rational<long long>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Largest integer <= r. boost::rational keeps the denominator positive.
inline long long floor_rat(const Rational& r) {
  const long long p = r.numerator();
  const long long q = r.denominator();
  const long long d = p / q;
  return (p % q != 0 && p < 0) ? d - 1 : d;
}

/// "p/q", or just "p" when the value is integral.
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += '/';
    s += std::to_string(r.denominator());
  }
  return s;
}

/// Decimal rendering with 12 significant digits, used by the CSV writers.
inline std::string to_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", to_double(r));
  return buf;
}

}  // namespace deptree
