#include "gauth/field.hpp"

#include <string>

#include "gauth/errors.hpp"

namespace gauth {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 2^64.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(uint64_t q) : q_(q) {
    if (!is_prime_u64(q)) throw FieldError("field order is not prime: " + std::to_string(q));
}

uint64_t PrimeField::pow(uint64_t base, uint64_t exp) const {
    return powmod(base, exp, q_);
}

uint64_t PrimeField::inv(uint64_t a) const {
    if (a == 0) throw FieldError("inverse of zero");
    // Extended Euclid on (a, q); q prime guarantees gcd 1.
    __int128 t = 0, new_t = 1;
    uint64_t r = q_, new_r = a % q_;
    while (new_r != 0) {
        uint64_t quot = r / new_r;
        __int128 tmp_t = t - static_cast<__int128>(quot) * new_t;
        t = new_t;
        new_t = tmp_t;
        uint64_t tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (t < 0) t += q_;
    return static_cast<uint64_t>(t);
}

} // namespace gauth
