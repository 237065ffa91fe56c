#include <goldenflow/laurent.hpp>

#include <sstream>
#include <stdexcept>

namespace gf {

LaurentPolynomial::LaurentPolynomial(long c) { add_term(0, BigInt(c)); }

LaurentPolynomial::LaurentPolynomial(const BigInt& c) { add_term(0, c); }

LaurentPolynomial::LaurentPolynomial(std::map<int, BigInt> terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const BigInt& c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::circle() {
  return monomial(1) + monomial(0) + monomial(-1);
}

void LaurentPolynomial::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPolynomial::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentPolynomial::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  LaurentPolynomial out;
  for (auto& [e1, c1] : terms_) {
    for (auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
  LaurentPolynomial r;
  for (auto& [e, c] : terms_) r.add_term(-e, c);
  return r;
}

BigInt LaurentPolynomial::eval_int(long q) const {
  if (q != 1 && q != -1) throw std::invalid_argument("eval_int: q must be +1 or -1");
  BigInt acc = 0;
  for (auto& [e, c] : terms_) {
    bool negate = (q == -1) && (e % 2 != 0);
    acc += negate ? BigInt(-c) : c;
  }
  return acc;
}

std::string LaurentPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) {
      os << mag;
      if (e != 0) os << "*";
    }
    if (e == 1) os << "q";
    if (e != 0 && e != 1) os << "q^" << e;
  }
  return os.str();
}

LaurentPolynomial substitute_q(const IntPolynomial& p) {
  LaurentPolynomial big_q = LaurentPolynomial::monomial(1) + LaurentPolynomial(2) +
                            LaurentPolynomial::monomial(-1);
  return p.eval_in(big_q);
}

}  // namespace gf
