#include "gauth/errors.hpp"
#include "gauth/group.hpp"

namespace gauth {

namespace {

// Elements carry their own discrete logs: k*P is the scalar k. Exists so
// every in-exponent identity can be checked against plain Shamir
// arithmetic. The target group is written additively as logs too, so
// "e(P,P)^k" is a scalar product.
class MockSuite final : public GroupSuite {
public:
    MockSuite(uint64_t q, bool counting)
        : GroupSuite(SuiteKind::Mock, "mock-q" + std::to_string(q), PrimeField(q), counting) {
        set_sizes(8, 8);
        GroupElement g;
        g.suite_id = suite_id();
        g.x = 1 % q;
        set_generator(g);
    }

protected:
    GroupElement make(uint64_t log) const {
        GroupElement e;
        e.suite_id = suite_id();
        e.x = log;
        return e;
    }

    TargetElement make_target(uint64_t log) const {
        TargetElement t;
        t.suite_id = suite_id();
        t.c0 = log;
        return t;
    }

    GroupElement identity_impl() const override { return make(0); }
    TargetElement target_identity_impl() const override { return make_target(0); }

    GroupElement add_impl(const GroupElement& a, const GroupElement& b) const override {
        return make(scalar_field().add(a.x, b.x));
    }

    GroupElement negate_impl(const GroupElement& a) const override {
        return make(scalar_field().neg(a.x));
    }

    GroupElement scalar_mul_impl(uint64_t k, const GroupElement& a) const override {
        bump_field_mults(1);
        return make(scalar_field().mul(k, a.x));
    }

    TargetElement pairing_impl(const GroupElement& a, const GroupElement& b) const override {
        bump_field_mults(1);
        return make_target(scalar_field().mul(a.x, b.x));
    }

    TargetElement target_mul_impl(const TargetElement& a, const TargetElement& b) const override {
        return make_target(scalar_field().add(a.c0, b.c0));
    }

    TargetElement target_pow_impl(const TargetElement& t, uint64_t e) const override {
        bump_field_mults(1);
        return make_target(scalar_field().mul(t.c0, scalar_field().reduce(e)));
    }

    bool in_subgroup_impl(const GroupElement& a) const override {
        return !a.infinity && a.y == 0 && scalar_field().canonical(a.x);
    }

    void encode_element(const GroupElement& a, ByteWriter& w) const override { w.u64be(a.x); }

    GroupElement decode_element_impl(ByteReader& r) const override {
        uint64_t v = r.u64be();
        if (!scalar_field().canonical(v)) throw SubgroupError("mock scalar not canonical");
        return make(v);
    }

    void encode_target(const TargetElement& t, ByteWriter& w) const override { w.u64be(t.c0); }

    TargetElement decode_target_impl(ByteReader& r) const override {
        uint64_t v = r.u64be();
        if (!scalar_field().canonical(v)) throw SubgroupError("mock target not canonical");
        return make_target(v);
    }
};

} // namespace

SuitePtr make_mock_suite(uint64_t q, bool counting) {
    return std::make_shared<MockSuite>(q, counting);
}

} // namespace gauth
