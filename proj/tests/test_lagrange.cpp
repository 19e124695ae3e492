#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"

#include "gauth/errors.hpp"
#include "gauth/field.hpp"
#include "gauth/lagrange.hpp"
#include "gauth/polynomial.hpp"
#include "gauth/rng.hpp"

using namespace gauth;

TEST_CASE("worked coefficients at zero over F_13") {
    PrimeField f(13);

    std::vector<uint64_t> two{1, 2};
    CHECK(lagrange_coefficient_at_zero(f, two, 0) == 2);
    CHECK(lagrange_coefficient_at_zero(f, two, 1) == 12); // -1 mod 13

    std::vector<uint64_t> three{1, 2, 3};
    std::vector<uint64_t> l = lagrange_coefficients_at_zero(f, three);
    CHECK(l == std::vector<uint64_t>{3, 10, 1});
}

TEST_CASE("coefficients at zero sum to one") {
    // Interpolating the constant-1 polynomial must give 1.
    PrimeField f(2305843009213693951ULL);
    DetRng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        size_t k = 2 + trial % 6;
        std::vector<uint64_t> xs;
        while (xs.size() < k) {
            uint64_t x = f.sample(rng);
            if (x == 0) continue;
            bool dup = false;
            for (uint64_t seen : xs) dup = dup || seen == x;
            if (!dup) xs.push_back(x);
        }
        uint64_t sum = 0;
        for (uint64_t l : lagrange_coefficients_at_zero(f, xs)) sum = f.add(sum, l);
        CHECK(sum == 1);
    }
}

TEST_CASE("secret interpolation inverts share evaluation") {
    PrimeField f(2305843009213693951ULL);
    DetRng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t t = 2 + trial % 5;
        Polynomial p = sample_polynomial(f, t, rng);
        std::vector<std::pair<uint64_t, uint64_t>> shares;
        for (uint64_t x = 1; x <= t; ++x) shares.emplace_back(x, poly_eval(p, x));
        CHECK(interpolate_secret(f, shares) == p.secret());
    }
}

TEST_CASE("full polynomial recovery") {
    PrimeField f(13);
    Polynomial p(f, {5, 3});
    std::vector<std::pair<uint64_t, uint64_t>> shares{{1, 8}, {2, 11}};
    Polynomial rec = interpolate_polynomial(f, shares);
    CHECK(rec.coefficients() == std::vector<uint64_t>{5, 3});

    DetRng rng(55);
    PrimeField big(2305843009213693951ULL);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial q = sample_polynomial(big, 4, rng);
        std::vector<std::pair<uint64_t, uint64_t>> pts;
        for (uint64_t x = 1; x <= 4; ++x) pts.emplace_back(x, poly_eval(q, x));
        CHECK(interpolate_polynomial(big, pts).coefficients() == q.coefficients());
    }
}

TEST_CASE("degenerate evaluation points are refused") {
    PrimeField f(13);
    std::vector<uint64_t> dup{1, 2, 1};
    CHECK_THROWS_AS(lagrange_coefficients_at_zero(f, dup), DegenerateEvalPointError);

    std::vector<uint64_t> zero{0, 2};
    CHECK_THROWS_AS(lagrange_coefficients_at_zero(f, zero), DegenerateEvalPointError);

    std::vector<std::pair<uint64_t, uint64_t>> dup_shares{{1, 8}, {1, 8}};
    CHECK_THROWS_AS(interpolate_secret(f, dup_shares), DegenerateEvalPointError);
}
