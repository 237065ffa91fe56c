#pragma once

#include <goldenflow/int_poly.hpp>

#include <utility>
#include <vector>

namespace gf {

/// Polynomial through all samples. Throws std::invalid_argument for too few or repeated
/// abscissae, std::domain_error if the fit exceeds degree_bound or has non-integer coefficients.
IntPolynomial lagrange_interpolate(const std::vector<std::pair<BigInt, BigInt>>& samples,
                                   int degree_bound);

}  // namespace gf
