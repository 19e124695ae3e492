#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "gauth/bytes.hpp"
#include "gauth/field.hpp"

namespace gauth {

enum class SuiteKind : uint8_t {
    Mock,  // elements carry their own discrete logs; test/simulation oracle only
    Curve, // supersingular y^2 = x^3 + x over F_p with distortion-map pairing
};

/// Element of the additive group G. One concrete value type for every
/// backend: the mock stores the discrete log in x, the curve stores
/// affine coordinates plus an infinity flag. suite_id ties the element
/// to the suite that created it.
struct GroupElement {
    uint64_t suite_id = 0;
    bool infinity = false;
    uint64_t x = 0;
    uint64_t y = 0;

    bool operator==(const GroupElement&) const = default;
};

/// Element of the target group G_T. Mock: c0 is a scalar log written
/// additively. Curve: c0 + c1*i in F_{p^2}.
struct TargetElement {
    uint64_t suite_id = 0;
    uint64_t c0 = 0;
    uint64_t c1 = 0;

    bool operator==(const TargetElement&) const = default;
};

/// Operation counters for instrumented suites. field_mults counts
/// base-field multiplications (squarings included), the unit behind the
/// cost model's T_mul figures.
struct OpCounters {
    uint64_t field_mults = 0;
    uint64_t scalar_muls = 0;
    uint64_t group_adds = 0;
    uint64_t pairings = 0;

    void reset() { *this = OpCounters{}; }
};

/// Abstract group suite: additive group G with generator P of prime
/// order q, target group G_T, and bilinear map e. Immutable and
/// shareable across threads once constructed, except that a suite
/// created with counting enabled carries mutable counters and is
/// single-owner.
class GroupSuite {
public:
    virtual ~GroupSuite() = default;

    SuiteKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    uint64_t suite_id() const { return suite_id_; }

    /// Order q of the generator; the scalar field of all exponents.
    const PrimeField& scalar_field() const { return scalar_field_; }

    const GroupElement& generator() const { return generator_; }
    GroupElement identity() const;
    TargetElement target_identity() const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;

    /// k-fold addition of a for k in [0, q), double-and-add ladder with a
    /// uniform per-bit pattern. 0*a is the identity.
    GroupElement scalar_mul(uint64_t k, const GroupElement& a) const;

    /// Bilinear map. Throws SubgroupError if an argument is outside the
    /// order-q subgroup.
    TargetElement pairing(const GroupElement& a, const GroupElement& b) const;

    TargetElement target_mul(const TargetElement& a, const TargetElement& b) const;
    TargetElement target_pow(const TargetElement& t, uint64_t e) const;

    bool in_subgroup(const GroupElement& a) const;

    /// Wire encodings. Mock elements: 8-byte big-endian scalar. Curve
    /// elements: tag byte (0 infinity, 1 affine) then two 8-byte
    /// big-endian coordinates. Targets: fixed-width big-endian value.
    size_t element_size() const { return element_size_; }
    size_t target_size() const { return target_size_; }
    Bytes encode(const GroupElement& a) const;
    Bytes encode(const TargetElement& t) const;

    /// Decode plus subgroup membership check (q*a = identity).
    GroupElement decode_element(std::span<const uint8_t> data) const;
    TargetElement decode_target(std::span<const uint8_t> data) const;

    bool counting() const { return counting_; }
    const OpCounters& counters() const { return counters_; }
    void reset_counters() const { counters_.reset(); }

protected:
    GroupSuite(SuiteKind kind, std::string name, PrimeField scalar_field, bool counting);

    void set_generator(const GroupElement& g) { generator_ = g; }
    void set_sizes(size_t element_size, size_t target_size) {
        element_size_ = element_size;
        target_size_ = target_size;
    }
    void check_same_suite(const GroupElement& a) const;
    void check_same_suite(const TargetElement& t) const;
    void bump_field_mults(uint64_t n) const {
        if (counting_) counters_.field_mults += n;
    }

    virtual GroupElement add_impl(const GroupElement& a, const GroupElement& b) const = 0;
    virtual GroupElement negate_impl(const GroupElement& a) const = 0;
    virtual GroupElement scalar_mul_impl(uint64_t k, const GroupElement& a) const = 0;
    virtual TargetElement pairing_impl(const GroupElement& a, const GroupElement& b) const = 0;
    virtual TargetElement target_mul_impl(const TargetElement& a, const TargetElement& b) const = 0;
    virtual TargetElement target_pow_impl(const TargetElement& t, uint64_t e) const = 0;
    virtual bool in_subgroup_impl(const GroupElement& a) const = 0;
    virtual GroupElement identity_impl() const = 0;
    virtual TargetElement target_identity_impl() const = 0;
    virtual void encode_element(const GroupElement& a, ByteWriter& w) const = 0;
    virtual GroupElement decode_element_impl(ByteReader& r) const = 0;
    virtual void encode_target(const TargetElement& t, ByteWriter& w) const = 0;
    virtual TargetElement decode_target_impl(ByteReader& r) const = 0;

    SuiteKind kind_;
    std::string name_;
    PrimeField scalar_field_;
    uint64_t suite_id_;
    GroupElement generator_;
    size_t element_size_ = 0;
    size_t target_size_ = 0;
    bool counting_ = false;
    mutable OpCounters counters_;
};

using SuitePtr = std::shared_ptr<const GroupSuite>;

/// Transparent oracle backend over any prime q: elements are their own
/// logs, the pairing is a log product. Unusable outside tests and
/// simulations by construction.
SuitePtr make_mock_suite(uint64_t q, bool counting = false);

/// Supersingular curve y^2 = x^3 + x over F_p, p = 3 (mod 4), subgroup
/// of prime order q | p+1, symmetric pairing via the distortion map
/// (x, y) -> (-x, i*y) and Miller's algorithm.
SuitePtr make_curve_suite(uint64_t p, uint64_t q, bool counting = false);

/// Desk-scale reference instance: p = 43, q = 11.
SuitePtr make_curve43_suite(bool counting = false);

/// Larger instance for timing runs: p = 2147486203, q = (p+1)/4 = 536871551.
SuitePtr make_curve_large_suite(bool counting = false);

} // namespace gauth
