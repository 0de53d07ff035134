#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace itnorm {

// All arithmetic in the toolkit is exact; no floating point anywhere.
using Rational = boost::rational<long long>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

// "3/2", "-1", "0"
inline std::string rational_text(const Rational& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

}  // namespace itnorm
