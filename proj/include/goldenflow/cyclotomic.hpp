#pragma once

#include <goldenflow/bigint.hpp>
#include <goldenflow/golden.hpp>
#include <goldenflow/laurent.hpp>
#include <goldenflow/mod5.hpp>

#include <array>
#include <optional>
#include <string>

namespace gf {

/// c0 + c1 z + c2 z^2 + c3 z^3 with z = exp(i pi / 5), z^4 = z^3 - z^2 + z - 1.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(long c) : c_{BigInt(c), 0, 0, 0} {}  // NOLINT
  CyclotomicNumber(const BigInt& c) : c_{c, 0, 0, 0} {}  // NOLINT
  explicit CyclotomicNumber(std::array<BigInt, 4> c) : c_(std::move(c)) {}

  /// z^k for any integer k.
  static CyclotomicNumber zeta_pow(long k);

  const std::array<BigInt, 4>& coeffs() const { return c_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber x, const CyclotomicNumber& y) { return x += y; }
  friend CyclotomicNumber operator-(CyclotomicNumber x, const CyclotomicNumber& y) { return x -= y; }
  friend CyclotomicNumber operator*(CyclotomicNumber x, const CyclotomicNumber& y) { return x *= y; }
  CyclotomicNumber operator-() const;
  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

  CyclotomicNumber pow(unsigned e) const;

  std::string str() const;

 private:
  std::array<BigInt, 4> c_{0, 0, 0, 0};
};

/// q -> z^k.
CyclotomicNumber eval_laurent_at_unit_root(const LaurentPolynomial& p, long k);

/// phi -> z - z^4. Throws std::domain_error unless both components are integers.
CyclotomicNumber golden_to_cyclotomic(const GoldenNumber& x);

/// Inverse of golden_to_cyclotomic on real elements; nullopt when x is not real.
std::optional<GoldenNumber> cyclotomic_to_golden(const CyclotomicNumber& x);

/// z -> -1, reduced mod 5.
Mod5 cyclotomic_mod5(const CyclotomicNumber& x);

/// Horner evaluation of an integer polynomial at a golden value.
GoldenNumber eval_int_poly_at_golden(const IntPolynomial& p, const GoldenNumber& x);

}  // namespace gf
