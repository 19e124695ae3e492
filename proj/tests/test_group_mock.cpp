#include <cstdint>

#include "doctest.h"

#include "gauth/bytes.hpp"
#include "gauth/errors.hpp"
#include "gauth/group.hpp"

using namespace gauth;

TEST_CASE("mock group is the additive group of F_q in disguise") {
    SuitePtr s = make_mock_suite(13);
    GroupElement P = s->generator();

    // Exhaustive addition table against modular arithmetic.
    for (uint64_t a = 0; a < 13; ++a) {
        GroupElement A = s->scalar_mul(a, P);
        CHECK(A.x == a);
        CHECK((A == s->identity()) == (a == 0));
        for (uint64_t b = 0; b < 13; ++b) {
            GroupElement B = s->scalar_mul(b, P);
            CHECK(s->add(A, B).x == (a + b) % 13);
        }
        CHECK(s->add(A, s->negate(A)) == s->identity());
    }
}

TEST_CASE("mock scalar multiplication matches repeated addition") {
    SuitePtr s = make_mock_suite(13);
    GroupElement P = s->generator();
    GroupElement acc = s->identity();
    for (uint64_t k = 0; k < 13; ++k) {
        CHECK(s->scalar_mul(k, P) == acc);
        acc = s->add(acc, P);
    }
    CHECK_THROWS_AS(s->scalar_mul(13, P), FieldError); // non-canonical scalar
}

TEST_CASE("mock pairing is bilinear and non-degenerate") {
    SuitePtr s = make_mock_suite(13);
    GroupElement P = s->generator();
    TargetElement gt = s->pairing(P, P);
    CHECK(gt != s->target_identity());
    for (uint64_t a = 0; a < 13; ++a) {
        for (uint64_t b = 0; b < 13; ++b) {
            TargetElement lhs = s->pairing(s->scalar_mul(a, P), s->scalar_mul(b, P));
            TargetElement rhs = s->target_pow(gt, (a * b) % 13);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("mock encoding round-trips and rejects junk") {
    SuitePtr s = make_mock_suite(13);
    CHECK(s->element_size() == 8);
    for (uint64_t a = 0; a < 13; ++a) {
        GroupElement A = s->scalar_mul(a, s->generator());
        Bytes enc = s->encode(A);
        CHECK(enc.size() == 8);
        CHECK(s->decode_element(enc) == A);
    }

    ByteWriter w;
    w.u64be(13); // = q, not canonical
    CHECK_THROWS_AS(s->decode_element(w.bytes()), SubgroupError);

    Bytes short_buf{1, 2, 3};
    CHECK_THROWS_AS(s->decode_element(short_buf), SubgroupError);
}

TEST_CASE("suites with different orders do not mix") {
    SuitePtr a = make_mock_suite(13);
    SuitePtr b = make_mock_suite(11);
    CHECK(a->suite_id() != b->suite_id());
    CHECK_THROWS_AS(a->add(a->generator(), b->generator()), SuiteMismatchError);
    CHECK_THROWS_AS(a->pairing(a->generator(), b->generator()), SuiteMismatchError);
}

TEST_CASE("operation counters attribute work to the right buckets") {
    SuitePtr s = make_mock_suite(13, /*counting=*/true);
    s->reset_counters();
    GroupElement P = s->generator();
    (void)s->scalar_mul(5, P);
    CHECK(s->counters().scalar_muls == 1);
    (void)s->add(P, P);
    CHECK(s->counters().group_adds == 1);
    (void)s->pairing(P, P);
    CHECK(s->counters().pairings == 1);
    s->reset_counters();
    CHECK(s->counters().scalar_muls == 0);
    CHECK(s->counters().field_mults == 0);
}

TEST_CASE("mock masking costs exactly one field multiplication") {
    // Transparent backend: k*P is literally one multiply in F_q. The
    // T_mul,q accounting of the cost model rests on this unit.
    SuitePtr s = make_mock_suite(2305843009213693951ULL, /*counting=*/true);
    GroupElement P = s->generator();

    auto cost_of = [&](uint64_t k) {
        s->reset_counters();
        (void)s->scalar_mul(k, P);
        return s->counters().field_mults;
    };

    CHECK(cost_of(12345) == 1);
    CHECK(cost_of((uint64_t{1} << 59) | 7) == 1);

    // k = 0 short-circuits to the identity before any field work.
    CHECK(cost_of(0) == 0);
}
