#include <cstdint>

#include "doctest.h"

#include "gauth/errors.hpp"
#include "gauth/field.hpp"
#include "gauth/rng.hpp"

using namespace gauth;

namespace {
constexpr uint64_t kM61 = 2305843009213693951ULL; // 2^61 - 1, prime
}

TEST_CASE("field ops agree with plain modular arithmetic at q=13") {
    PrimeField f(13);
    for (uint64_t a = 0; a < 13; ++a) {
        for (uint64_t b = 0; b < 13; ++b) {
            CHECK(f.add(a, b) == (a + b) % 13);
            CHECK(f.sub(a, b) == (a + 13 - b) % 13);
            CHECK(f.mul(a, b) == (a * b) % 13);
        }
        CHECK(f.add(a, f.neg(a)) == 0);
    }
}

TEST_CASE("inverse and Fermat exponentiation") {
    PrimeField f(13);
    for (uint64_t a = 1; a < 13; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, 12) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), FieldError);

    PrimeField big(kM61);
    DetRng rng(71);
    for (int i = 0; i < 200; ++i) {
        uint64_t a = big.sample(rng);
        if (a == 0) continue;
        CHECK(big.mul(a, big.inv(a)) == 1);
        CHECK(big.pow(a, kM61 - 1) == 1);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    PrimeField f(43);
    for (uint64_t base = 0; base < 43; base += 5) {
        uint64_t acc = 1;
        for (uint64_t e = 0; e < 20; ++e) {
            CHECK(f.pow(base, e) == acc);
            acc = f.mul(acc, base);
        }
    }
}

TEST_CASE("addition does not overflow near 2^64") {
    PrimeField f(18446744073709551557ULL); // largest prime below 2^64
    uint64_t a = f.modulus() - 1;
    CHECK(f.add(a, a) == f.modulus() - 2);
    CHECK(f.mul(a, a) == 1); // (-1)*(-1)
    CHECK(f.sub(0, a) == 1);
}

TEST_CASE("canonical and reduce") {
    PrimeField f(13);
    CHECK(f.canonical(12));
    CHECK_FALSE(f.canonical(13));
    CHECK(f.reduce(13) == 0);
    CHECK(f.reduce(27) == 1);
}

TEST_CASE("sample is uniform-range and replayable") {
    PrimeField f(13);
    DetRng a(9), b(9);
    for (int i = 0; i < 1000; ++i) {
        uint64_t v = f.sample(a);
        CHECK(v < 13);
        CHECK(v == f.sample(b)); // same seed, same stream
    }
}

TEST_CASE("primality testing") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(13));
    CHECK(is_prime_u64(43));
    CHECK(is_prime_u64(536871551));      // curve-large subgroup order
    CHECK(is_prime_u64(2147486203));     // curve-large base field
    CHECK(is_prime_u64(kM61));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4));
    CHECK_FALSE(is_prime_u64(561));      // Carmichael
    CHECK_FALSE(is_prime_u64(6601));     // Carmichael
    CHECK_FALSE(is_prime_u64(kM61 - 2));
    CHECK_THROWS_AS(PrimeField(12), FieldError);
}
