#pragma once

#include <goldenflow/bigint.hpp>

#include <string>

namespace gf {

/// Element of the field Z/5.
class Mod5 {
 public:
  Mod5() = default;
  Mod5(long v) : r_(static_cast<int>(((v % 5) + 5) % 5)) {}  // NOLINT
  explicit Mod5(const BigInt& v) : r_(static_cast<int>(floor_mod(v, 5))) {}

  int value() const { return r_; }

  friend Mod5 operator+(Mod5 x, Mod5 y) { return Mod5(x.r_ + y.r_); }
  friend Mod5 operator-(Mod5 x, Mod5 y) { return Mod5(x.r_ - y.r_); }
  friend Mod5 operator*(Mod5 x, Mod5 y) { return Mod5(x.r_ * y.r_); }
  Mod5 operator-() const { return Mod5(-r_); }
  Mod5& operator+=(Mod5 o) { return *this = *this + o; }
  Mod5& operator-=(Mod5 o) { return *this = *this - o; }
  Mod5& operator*=(Mod5 o) { return *this = *this * o; }
  friend bool operator==(Mod5, Mod5) = default;

  /// Throws std::domain_error for zero.
  Mod5 inverse() const;
  friend Mod5 operator/(Mod5 x, Mod5 y) { return x * y.inverse(); }
  Mod5 pow(long e) const;

  std::string str() const { return std::to_string(r_); }

 private:
  int r_ = 0;
};

}  // namespace gf
