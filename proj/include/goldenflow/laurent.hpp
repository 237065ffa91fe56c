#pragma once

#include <goldenflow/bigint.hpp>
#include <goldenflow/int_poly.hpp>

#include <map>
#include <string>

namespace gf {

/// Laurent polynomial in q with integer coefficients; zero terms are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long c);  // NOLINT
  LaurentPolynomial(const BigInt& c);  // NOLINT
  explicit LaurentPolynomial(std::map<int, BigInt> terms);

  static LaurentPolynomial monomial(int exponent, const BigInt& c = 1);
  /// q + 1 + q^{-1}, the value of a crossing-free circle.
  static LaurentPolynomial circle();

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int e) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  LaurentPolynomial operator-() const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned e) const;
  /// q -> q^{-1}.
  LaurentPolynomial invert_variable() const;

  BigInt eval_int(long q) const;  // q = +-1 only

  std::string str() const;

 private:
  void add_term(int e, const BigInt& c);
  std::map<int, BigInt> terms_;
};

/// Substitutes Q = q + 2 + q^{-1}.
LaurentPolynomial substitute_q(const IntPolynomial& p);

}  // namespace gf
