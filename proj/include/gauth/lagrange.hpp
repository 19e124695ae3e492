#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gauth/field.hpp"
#include "gauth/polynomial.hpp"

namespace gauth {

/// Lagrange weight of point xs[i] for interpolation at zero:
///   lambda_i = prod_{r != i} (-x_r) * (x_i - x_r)^{-1}  (mod q).
/// All xs must be distinct and nonzero (zero is where the secret lives).
uint64_t lagrange_coefficient_at_zero(const PrimeField& field, std::span<const uint64_t> xs, size_t i);

/// All weights at once; same constraints as above.
std::vector<uint64_t> lagrange_coefficients_at_zero(const PrimeField& field, std::span<const uint64_t> xs);

/// f(0) from >= 1 points with distinct nonzero x values. This is the
/// scalar oracle every in-exponent verification is checked against.
uint64_t interpolate_secret(const PrimeField& field,
                            std::span<const std::pair<uint64_t, uint64_t>> points);

/// Full coefficient recovery from exactly the given points (degree
/// |points|-1 basis expansion). Drives the share-capture attack on the
/// Harn baseline.
Polynomial interpolate_polynomial(const PrimeField& field,
                                  std::span<const std::pair<uint64_t, uint64_t>> points);

} // namespace gauth
