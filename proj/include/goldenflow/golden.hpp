#pragma once

#include <goldenflow/bigint.hpp>

#include <string>

namespace gf {

/// Element a + b*phi of Q(phi), phi = (1 + sqrt 5) / 2, with phi^2 = phi + 1.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(long a) : a_(a) {}  // NOLINT
  GoldenNumber(const BigInt& a) : a_(a) {}  // NOLINT
  GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenNumber phi() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integral() const { return gf::is_integral(a_) && gf::is_integral(b_); }
  bool is_rational() const { return b_ == 0; }

  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);
  GoldenNumber& operator/=(const GoldenNumber& o);
  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  GoldenNumber operator-() const { return {-a_, -b_}; }
  friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;

  /// Throws std::domain_error for zero.
  GoldenNumber inverse() const;
  /// Negative exponents allowed for nonzero values.
  GoldenNumber pow(long e) const;
  /// Field norm (a + b phi)(a + b - b phi) = a^2 + ab - b^2.
  Rational norm() const;

  double approx() const;
  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Exact sign of the real embedding phi = 1.618...
int golden_sign(const GoldenNumber& x);

/// Galois conjugation sqrt5 -> -sqrt5, i.e. a + b phi -> (a + b) - b phi.
GoldenNumber golden_conjugate(const GoldenNumber& x);

/// Evaluation points used throughout: Q = 2 - phi, 3 - phi, phi + 1, phi + 2.
enum class GoldenPoint { W, Z, PhiPlus1, PhiPlus2 };

GoldenNumber golden_point(GoldenPoint p);
const char* golden_point_name(GoldenPoint p);

namespace golden {
inline GoldenNumber phi() { return GoldenNumber::phi(); }
inline GoldenNumber w() { return golden_point(GoldenPoint::W); }
inline GoldenNumber z() { return golden_point(GoldenPoint::Z); }
}  // namespace golden

}  // namespace gf
