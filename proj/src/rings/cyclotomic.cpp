#include <goldenflow/cyclotomic.hpp>

#include <sstream>
#include <stdexcept>

namespace gf {

Mod5 Mod5::inverse() const {
  if (r_ == 0) throw std::domain_error("Mod5: division by zero");
  static constexpr int kInv[5] = {0, 1, 3, 2, 4};
  return Mod5(kInv[r_]);
}

Mod5 Mod5::pow(long e) const {
  if (r_ == 0) {
    if (e < 0) throw std::domain_error("Mod5: division by zero");
    return Mod5(e == 0 ? 1 : 0);
  }
  Mod5 base = e < 0 ? inverse() : *this;
  long k = (e < 0 ? -e : e) % 4;  // multiplicative group has order 4
  Mod5 result(1);
  for (long i = 0; i < k; ++i) result *= base;
  return result;
}

CyclotomicNumber CyclotomicNumber::zeta_pow(long k) {
  long m = ((k % 10) + 10) % 10;
  bool negate = m >= 5;
  if (negate) m -= 5;
  std::array<BigInt, 4> c{0, 0, 0, 0};
  if (m < 4) {
    c[m] = 1;
  } else {
    c = {-1, 1, -1, 1};
  }
  CyclotomicNumber r(c);
  return negate ? -r : r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  std::array<BigInt, 7> t{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) t[i + j] += c_[i] * o.c_[j];
  }
  for (int k = 6; k >= 4; --k) {
    const BigInt c = t[k];
    if (c == 0) continue;
    t[k - 1] += c;
    t[k - 2] -= c;
    t[k - 3] += c;
    t[k - 4] -= c;
  }
  for (int i = 0; i < 4; ++i) c_[i] = std::move(t[i]);
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned e) const {
  CyclotomicNumber result(1);
  CyclotomicNumber base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string CyclotomicNumber::str() const {
  std::ostringstream os;
  os << "[" << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << "]";
  return os.str();
}

CyclotomicNumber eval_laurent_at_unit_root(const LaurentPolynomial& p, long k) {
  CyclotomicNumber acc;
  for (auto& [e, c] : p.terms()) acc += CyclotomicNumber(c) * CyclotomicNumber::zeta_pow(k * e);
  return acc;
}

CyclotomicNumber golden_to_cyclotomic(const GoldenNumber& x) {
  if (!x.is_integral()) throw std::domain_error("golden_to_cyclotomic: non-integral input");
  BigInt a = boost::multiprecision::numerator(x.a());
  BigInt b = boost::multiprecision::numerator(x.b());
  CyclotomicNumber phi = CyclotomicNumber::zeta_pow(1) - CyclotomicNumber::zeta_pow(4);
  return CyclotomicNumber(a) + CyclotomicNumber(b) * phi;
}

std::optional<GoldenNumber> cyclotomic_to_golden(const CyclotomicNumber& x) {
  // a + b phi = (a + b) + b z^2 - b z^3
  const auto& c = x.coeffs();
  if (c[1] != 0 || c[2] != -c[3]) return std::nullopt;
  return GoldenNumber(Rational(c[0] - c[2]), Rational(c[2]));
}

Mod5 cyclotomic_mod5(const CyclotomicNumber& x) {
  const auto& c = x.coeffs();
  return Mod5(BigInt(c[0] - c[1] + c[2] - c[3]));
}

GoldenNumber eval_int_poly_at_golden(const IntPolynomial& p, const GoldenNumber& x) {
  return p.eval_in(x);
}

}  // namespace gf
