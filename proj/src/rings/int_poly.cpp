#include <goldenflow/int_poly.hpp>

#include <sstream>
#include <stdexcept>

namespace gf {

IntPolynomial::IntPolynomial(long c) : coeffs_{BigInt(c)} { trim(); }

IntPolynomial::IntPolynomial(const BigInt& c) : coeffs_{c} { trim(); }

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::variable() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::linear_root(long c) { return IntPolynomial{-c, 1}; }

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result(1);
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& monic) const {
  if (monic.is_zero() || monic.coeffs_.back() != 1) {
    throw std::invalid_argument("divide_exact: divisor must be monic");
  }
  if (is_zero()) return IntPolynomial{};
  int dd = monic.degree();
  if (degree() < dd) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - dd);
  for (int i = degree(); i >= dd; --i) {
    BigInt c = rem[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * monic.coeffs_[j];
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << "Q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace gf
