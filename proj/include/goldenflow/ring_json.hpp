#pragma once

#include <goldenflow/cyclotomic.hpp>
#include <goldenflow/golden.hpp>
#include <goldenflow/int_poly.hpp>
#include <goldenflow/laurent.hpp>

#include <json.hpp>

namespace gf {

using Json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const IntPolynomial& p);              // [c0, c1, ...]
Json to_json(const LaurentPolynomial& p);          // {"-1": c, "0": c, ...}
Json to_json(const GoldenNumber& x);               // {"a": [num, den], "b": [num, den]}
Json to_json(const CyclotomicNumber& x);           // [c0, c1, c2, c3]

IntPolynomial int_poly_from_json(const Json& j);
LaurentPolynomial laurent_from_json(const Json& j);
GoldenNumber golden_from_json(const Json& j);
CyclotomicNumber cyclotomic_from_json(const Json& j);

}  // namespace gf
