#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gauth/field.hpp"
#include "gauth/rng.hpp"

namespace gauth {

/// Secret polynomial f(x) = a_0 + a_1 x + ... + a_{t-1} x^{t-1} over a
/// prime field. a_0 is the group secret; the coefficient count equals
/// the threshold t.
class Polynomial {
public:
    Polynomial(PrimeField field, std::vector<uint64_t> coefficients);

    const PrimeField& field() const { return field_; }
    const std::vector<uint64_t>& coefficients() const { return coeffs_; }
    size_t threshold() const { return coeffs_.size(); }
    uint64_t secret() const { return coeffs_[0]; }

    bool operator==(const Polynomial& other) const {
        return field_ == other.field_ && coeffs_ == other.coeffs_;
    }

private:
    PrimeField field_;
    std::vector<uint64_t> coeffs_;
};

/// Horner evaluation of f at x. x must be canonical in [0, q).
uint64_t poly_eval(const Polynomial& poly, uint64_t x);

/// Draws t coefficients uniformly from [0, q); for t >= 2 the leading
/// coefficient is redrawn until nonzero so the degree is exactly t-1.
/// Rejects t = 0.
Polynomial sample_polynomial(const PrimeField& field, size_t t, DetRng& rng);

} // namespace gauth
