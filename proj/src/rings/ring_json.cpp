#include <goldenflow/ring_json.hpp>

#include <limits>
#include <stdexcept>

namespace gf {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (auto& c : p.coeffs()) out.push_back(bigint_to_json(c));
  return out;
}

Json to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (auto& [e, c] : p.terms()) out[std::to_string(e)] = bigint_to_json(c);
  return out;
}

static Json rational_to_json(const Rational& r) {
  return Json::array({bigint_to_json(boost::multiprecision::numerator(r)),
                      bigint_to_json(boost::multiprecision::denominator(r))});
}

static Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]");
  BigInt den = bigint_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(bigint_from_json(j[0]), den);
}

Json to_json(const GoldenNumber& x) {
  return Json{{"a", rational_to_json(x.a())}, {"b", rational_to_json(x.b())}};
}

Json to_json(const CyclotomicNumber& x) {
  Json out = Json::array();
  for (auto& c : x.coeffs()) out.push_back(bigint_to_json(c));
  return out;
}

IntPolynomial int_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (auto& v : j) c.push_back(bigint_from_json(v));
  return IntPolynomial(std::move(c));
}

LaurentPolynomial laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial must be an object");
  std::map<int, BigInt> terms;
  for (auto& [k, v] : j.items()) terms[std::stoi(k)] += bigint_from_json(v);
  return LaurentPolynomial(std::move(terms));
}

GoldenNumber golden_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw std::invalid_argument("golden number must be {\"a\":..., \"b\":...}");
  }
  return {rational_from_json(j["a"]), rational_from_json(j["b"])};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected 4 coefficients");
  return CyclotomicNumber(std::array<BigInt, 4>{bigint_from_json(j[0]), bigint_from_json(j[1]),
                                                bigint_from_json(j[2]), bigint_from_json(j[3])});
}

}  // namespace gf
