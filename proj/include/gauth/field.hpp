#pragma once

#include <cstdint>

#include "gauth/rng.hpp"

namespace gauth {

/// Prime field of order q < 2^64. Scalars are plain uint64_t values kept
/// as canonical representatives in [0, q). The protocol's exponent
/// arithmetic (Shamir shares, Lagrange weights) all lives here.
class PrimeField {
public:
    /// Throws FieldError unless q is prime (deterministic Miller-Rabin).
    explicit PrimeField(uint64_t q);

    uint64_t modulus() const { return q_; }

    bool canonical(uint64_t a) const { return a < q_; }

    uint64_t reduce(uint64_t a) const { return a % q_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        if (s >= q_ || s < a) s -= q_;
        return s;
    }

    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (q_ - b); }

    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : q_ - a; }

    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % q_);
    }

    uint64_t pow(uint64_t base, uint64_t exp) const;

    /// Inverse via extended Euclid. Throws FieldError on zero.
    uint64_t inv(uint64_t a) const;

    /// Uniform scalar in [0, q).
    uint64_t sample(DetRng& rng) const { return rng.below(q_); }

    bool operator==(const PrimeField& other) const { return q_ == other.q_; }

private:
    uint64_t q_;
};

/// Deterministic primality test for n < 2^64.
bool is_prime_u64(uint64_t n);

} // namespace gauth
