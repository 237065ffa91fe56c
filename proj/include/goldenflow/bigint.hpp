#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt floor_mod(const BigInt& a, long m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace gf
