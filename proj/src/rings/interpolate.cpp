#include <goldenflow/interpolate.hpp>

#include <set>
#include <stdexcept>

namespace gf {

IntPolynomial lagrange_interpolate(const std::vector<std::pair<BigInt, BigInt>>& samples,
                                   int degree_bound) {
  const size_t n = samples.size();
  if (degree_bound < 0 || n < static_cast<size_t>(degree_bound) + 1) {
    throw std::invalid_argument("lagrange_interpolate: need degree_bound + 1 samples");
  }
  std::set<BigInt> xs;
  for (auto& s : samples) {
    if (!xs.insert(s.first).second) {
      throw std::invalid_argument("lagrange_interpolate: repeated abscissa");
    }
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = Rational(samples[i].second);
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].first - samples[i - level].first);
    }
  }
  std::vector<Rational> poly{dd[n - 1]};
  for (size_t k = n - 1; k-- > 0;) {
    // poly = poly * (Q - x_k) + dd[k]
    std::vector<Rational> next(poly.size() + 1);
    const Rational xk(samples[k].first);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xk;
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs;
  for (auto& c : poly) {
    if (!is_integral(c)) throw std::domain_error("lagrange_interpolate: non-integral coefficient");
    coeffs.push_back(boost::multiprecision::numerator(c));
  }
  IntPolynomial result(std::move(coeffs));
  if (result.degree() > degree_bound) {
    throw std::domain_error("lagrange_interpolate: samples exceed the degree bound");
  }
  return result;
}

}  // namespace gf
