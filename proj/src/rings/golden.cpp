#include <goldenflow/golden.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gf {

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ + bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Rational GoldenNumber::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

GoldenNumber GoldenNumber::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("GoldenNumber: division by zero");
  GoldenNumber c = golden_conjugate(*this);
  return {c.a_ / n, c.b_ / n};
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o) { return *this *= o.inverse(); }

GoldenNumber GoldenNumber::pow(long e) const {
  GoldenNumber base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GoldenNumber result(1);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

double GoldenNumber::approx() const {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return static_cast<double>(a_) + static_cast<double>(b_) * phi;
}

std::string GoldenNumber::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
  } else if (a_ == 0) {
    os << b_ << "*phi";
  } else {
    os << a_ << (b_ < 0 ? " - " : " + ") << (b_ < 0 ? Rational(-b_) : b_) << "*phi";
  }
  return os.str();
}

int golden_sign(const GoldenNumber& x) {
  // a + b phi = ((2a + b) + b sqrt5) / 2
  Rational u = 2 * x.a() + x.b();
  const Rational& v = x.b();
  int su = u > 0 ? 1 : (u < 0 ? -1 : 0);
  int sv = v > 0 ? 1 : (v < 0 ? -1 : 0);
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  Rational diff = u * u - 5 * v * v;
  int sd = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
  return su > 0 ? sd : -sd;
}

GoldenNumber golden_conjugate(const GoldenNumber& x) { return {x.a() + x.b(), -x.b()}; }

GoldenNumber golden_point(GoldenPoint p) {
  switch (p) {
    case GoldenPoint::W: return {Rational(2), Rational(-1)};
    case GoldenPoint::Z: return {Rational(3), Rational(-1)};
    case GoldenPoint::PhiPlus1: return {Rational(1), Rational(1)};
    case GoldenPoint::PhiPlus2: return {Rational(2), Rational(1)};
  }
  throw std::invalid_argument("unknown golden point");
}

const char* golden_point_name(GoldenPoint p) {
  switch (p) {
    case GoldenPoint::W: return "w";
    case GoldenPoint::Z: return "z";
    case GoldenPoint::PhiPlus1: return "phi1";
    case GoldenPoint::PhiPlus2: return "phi2";
  }
  return "?";
}

}  // namespace gf
