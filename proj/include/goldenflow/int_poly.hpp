#pragma once

#include <goldenflow/bigint.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gf {

/// Univariate polynomial in Q with arbitrary-precision integer coefficients.
/// Coefficient i multiplies Q^i; the leading coefficient is never zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c);  // NOLINT: constants convert implicitly
  IntPolynomial(const BigInt& c);  // NOLINT
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial variable();
  /// Q - c.
  static IntPolynomial linear_root(long c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned e) const;

  BigInt eval(const BigInt& x) const;

  /// Horner evaluation in any commutative ring constructible from BigInt.
  template <class Ring>
  Ring eval_in(const Ring& x) const {
    Ring acc(BigInt(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Ring(*it);
    }
    return acc;
  }

  /// Exact quotient by a monic divisor, or nullopt when the remainder is nonzero.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& monic) const;

  /// Human-readable form such as "Q^2 - 3*Q + 2".
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace gf
