#include "gauth/group.hpp"

#include "gauth/errors.hpp"

namespace gauth {

GroupSuite::GroupSuite(SuiteKind kind, std::string name, PrimeField scalar_field, bool counting)
    : kind_(kind), name_(std::move(name)), scalar_field_(scalar_field), counting_(counting) {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(kind_));
    w.raw(Bytes(name_.begin(), name_.end()));
    w.u64be(scalar_field_.modulus());
    suite_id_ = fnv1a64(w.bytes());
}

void GroupSuite::check_same_suite(const GroupElement& a) const {
    if (a.suite_id != suite_id_)
        throw SuiteMismatchError("group element belongs to a different suite");
}

void GroupSuite::check_same_suite(const TargetElement& t) const {
    if (t.suite_id != suite_id_)
        throw SuiteMismatchError("target element belongs to a different suite");
}

GroupElement GroupSuite::identity() const { return identity_impl(); }

TargetElement GroupSuite::target_identity() const { return target_identity_impl(); }

GroupElement GroupSuite::add(const GroupElement& a, const GroupElement& b) const {
    check_same_suite(a);
    check_same_suite(b);
    if (counting_) ++counters_.group_adds;
    return add_impl(a, b);
}

GroupElement GroupSuite::negate(const GroupElement& a) const {
    check_same_suite(a);
    return negate_impl(a);
}

GroupElement GroupSuite::scalar_mul(uint64_t k, const GroupElement& a) const {
    check_same_suite(a);
    if (!scalar_field_.canonical(k)) throw FieldError("scalar out of range for suite");
    if (counting_) ++counters_.scalar_muls;
    if (k == 0) return identity_impl();
    return scalar_mul_impl(k, a);
}

TargetElement GroupSuite::pairing(const GroupElement& a, const GroupElement& b) const {
    check_same_suite(a);
    check_same_suite(b);
    if (!in_subgroup_impl(a) || !in_subgroup_impl(b))
        throw SubgroupError("pairing argument outside the order-q subgroup");
    if (counting_) ++counters_.pairings;
    return pairing_impl(a, b);
}

TargetElement GroupSuite::target_mul(const TargetElement& a, const TargetElement& b) const {
    check_same_suite(a);
    check_same_suite(b);
    return target_mul_impl(a, b);
}

TargetElement GroupSuite::target_pow(const TargetElement& t, uint64_t e) const {
    check_same_suite(t);
    return target_pow_impl(t, e);
}

bool GroupSuite::in_subgroup(const GroupElement& a) const {
    check_same_suite(a);
    return in_subgroup_impl(a);
}

Bytes GroupSuite::encode(const GroupElement& a) const {
    check_same_suite(a);
    ByteWriter w;
    encode_element(a, w);
    return w.take();
}

Bytes GroupSuite::encode(const TargetElement& t) const {
    check_same_suite(t);
    ByteWriter w;
    encode_target(t, w);
    return w.take();
}

GroupElement GroupSuite::decode_element(std::span<const uint8_t> data) const {
    if (data.size() != element_size_) throw SubgroupError("group element encoding has wrong length");
    ByteReader r(data);
    GroupElement a = decode_element_impl(r);
    if (!in_subgroup_impl(a)) throw SubgroupError("decoded element outside the order-q subgroup");
    return a;
}

TargetElement GroupSuite::decode_target(std::span<const uint8_t> data) const {
    if (data.size() != target_size_) throw SubgroupError("target element encoding has wrong length");
    ByteReader r(data);
    return decode_target_impl(r);
}

} // namespace gauth
