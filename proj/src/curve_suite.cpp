#include <bit>
#include <string>

#include "gauth/errors.hpp"
#include "gauth/group.hpp"

namespace gauth {

namespace {

// Supersingular curve y^2 = x^3 + x over F_p with p = 3 (mod 4). The
// full group has order p+1; the suite works in a subgroup of prime
// order q | p+1. The symmetric pairing is the reduced Tate pairing with
// the distortion map (x, y) -> (-x, i*y), i^2 = -1, computed by
// Miller's algorithm over F_{p^2}. Vertical-line factors land in F_p
// and die in the final exponentiation, so they are skipped.
class CurveSuite final : public GroupSuite {
public:
    CurveSuite(uint64_t p, uint64_t q, bool counting)
        : GroupSuite(SuiteKind::Curve,
                     "curve-p" + std::to_string(p) + "-q" + std::to_string(q),
                     PrimeField(q), counting),
          base_(p),
          p_(p) {
        if (p % 4 != 3) throw FieldError("curve base prime must be 3 mod 4");
        if ((p + 1) % q != 0) throw FieldError("subgroup order must divide p+1");
        cofactor_ = (p + 1) / q;
        set_sizes(17, 16);
        set_generator(find_generator());
        if (!mul_any(scalar_field().modulus(), generator()).infinity)
            throw FieldError("generator does not have order q");
        if (pairing_impl(generator(), generator()) == target_identity_impl())
            throw FieldError("pairing is degenerate on the generator");
        reset_counters();
    }

protected:
    struct Fp2 {
        uint64_t c0 = 1;
        uint64_t c1 = 0;
        bool operator==(const Fp2&) const = default;
    };

    uint64_t fmul(uint64_t a, uint64_t b) const {
        bump_field_mults(1);
        return base_.mul(a, b);
    }

    Fp2 f2mul(const Fp2& u, const Fp2& v) const {
        Fp2 r;
        r.c0 = base_.sub(fmul(u.c0, v.c0), fmul(u.c1, v.c1));
        r.c1 = base_.add(fmul(u.c0, v.c1), fmul(u.c1, v.c0));
        return r;
    }

    Fp2 f2pow(Fp2 u, uint64_t e) const {
        Fp2 r;
        while (e) {
            if (e & 1) r = f2mul(r, u);
            u = f2mul(u, u);
            e >>= 1;
        }
        return r;
    }

    GroupElement make(uint64_t x, uint64_t y) const {
        GroupElement e;
        e.suite_id = suite_id();
        e.x = x;
        e.y = y;
        return e;
    }

    GroupElement make_infinity() const {
        GroupElement e;
        e.suite_id = suite_id();
        e.infinity = true;
        return e;
    }

    TargetElement make_target(const Fp2& v) const {
        TargetElement t;
        t.suite_id = suite_id();
        t.c0 = v.c0;
        t.c1 = v.c1;
        return t;
    }

    bool on_curve(const GroupElement& a) const {
        if (a.infinity) return true;
        if (!base_.canonical(a.x) || !base_.canonical(a.y)) return false;
        uint64_t lhs = fmul(a.y, a.y);
        uint64_t rhs = base_.add(fmul(fmul(a.x, a.x), a.x), a.x);
        return lhs == rhs;
    }

    GroupElement identity_impl() const override { return make_infinity(); }

    TargetElement target_identity_impl() const override { return make_target(Fp2{}); }

    GroupElement add_impl(const GroupElement& a, const GroupElement& b) const override {
        if (a.infinity) return b;
        if (b.infinity) return a;
        if (a.x == b.x) {
            if (a.y != b.y || a.y == 0) return make_infinity();
            return double_point(a);
        }
        uint64_t lam = fmul(base_.sub(b.y, a.y), base_.inv(base_.sub(b.x, a.x)));
        uint64_t x3 = base_.sub(base_.sub(fmul(lam, lam), a.x), b.x);
        uint64_t y3 = base_.sub(fmul(lam, base_.sub(a.x, x3)), a.y);
        return make(x3, y3);
    }

    GroupElement double_point(const GroupElement& a) const {
        uint64_t sq = fmul(a.x, a.x);
        uint64_t num = base_.add(base_.add(sq, base_.add(sq, sq)), 1);
        uint64_t lam = fmul(num, base_.inv(base_.add(a.y, a.y)));
        uint64_t x3 = base_.sub(base_.sub(fmul(lam, lam), a.x), a.x);
        uint64_t y3 = base_.sub(fmul(lam, base_.sub(a.x, x3)), a.y);
        return make(x3, y3);
    }

    GroupElement negate_impl(const GroupElement& a) const override {
        if (a.infinity || a.y == 0) return a;
        return make(a.x, base_.sub(0, a.y));
    }

    // Ladder with a uniform per-bit pattern: every bit costs one doubling
    // and one addition, the addition result being kept only on set bits.
    // Member commitment cost therefore depends on the scalar's bit width
    // alone.
    GroupElement scalar_mul_impl(uint64_t k, const GroupElement& a) const override {
        GroupElement v = a;
        for (int i = std::bit_width(k) - 2; i >= 0; --i) {
            v = add_impl(v, v);
            GroupElement w = add_impl(v, a);
            if ((k >> i) & 1) v = w;
        }
        return v;
    }

    // Plain double-and-add for internal use (cofactor clearing, subgroup
    // checks); k may equal q here.
    GroupElement mul_any(uint64_t k, const GroupElement& a) const {
        GroupElement acc = make_infinity();
        GroupElement base = a;
        while (k) {
            if (k & 1) acc = add_impl(acc, base);
            base = add_impl(base, base);
            k >>= 1;
        }
        return acc;
    }

    // Line through v and w (tangent when v == w) evaluated at the
    // distorted image (-x_b, i*y_b) of b. Vertical lines evaluate into
    // F_p and are eliminated by the final exponentiation.
    Fp2 line_eval(const GroupElement& v, const GroupElement& w, const GroupElement& b) const {
        if (v.infinity || w.infinity) return Fp2{};
        uint64_t lam;
        if (v.x == w.x && v.y == w.y) {
            if (v.y == 0) return Fp2{};
            uint64_t sq = fmul(v.x, v.x);
            uint64_t num = base_.add(base_.add(sq, base_.add(sq, sq)), 1);
            lam = fmul(num, base_.inv(base_.add(v.y, v.y)));
        } else if (v.x == w.x) {
            return Fp2{};
        } else {
            lam = fmul(base_.sub(w.y, v.y), base_.inv(base_.sub(w.x, v.x)));
        }
        Fp2 r;
        r.c0 = base_.sub(fmul(lam, base_.add(b.x, v.x)), v.y);
        r.c1 = b.y;
        return r;
    }

    TargetElement pairing_impl(const GroupElement& a, const GroupElement& b) const override {
        if (a.infinity || b.infinity) return target_identity_impl();
        uint64_t q = scalar_field().modulus();
        Fp2 f;
        GroupElement v = a;
        for (int i = std::bit_width(q) - 2; i >= 0; --i) {
            f = f2mul(f2mul(f, f), line_eval(v, v, b));
            v = add_impl(v, v);
            if ((q >> i) & 1) {
                f = f2mul(f, line_eval(v, a, b));
                v = add_impl(v, a);
            }
        }
        uint64_t exponent = (p_ * p_ - 1) / q;
        return make_target(f2pow(f, exponent));
    }

    TargetElement target_mul_impl(const TargetElement& a, const TargetElement& b) const override {
        return make_target(f2mul(Fp2{a.c0, a.c1}, Fp2{b.c0, b.c1}));
    }

    TargetElement target_pow_impl(const TargetElement& t, uint64_t e) const override {
        return make_target(f2pow(Fp2{t.c0, t.c1}, e));
    }

    bool in_subgroup_impl(const GroupElement& a) const override {
        if (a.infinity) return true;
        if (!on_curve(a)) return false;
        return mul_any(scalar_field().modulus(), a).infinity;
    }

    void encode_element(const GroupElement& a, ByteWriter& w) const override {
        if (a.infinity) {
            w.u8(0);
            w.u64be(0);
            w.u64be(0);
        } else {
            w.u8(1);
            w.u64be(a.x);
            w.u64be(a.y);
        }
    }

    GroupElement decode_element_impl(ByteReader& r) const override {
        uint8_t tag = r.u8();
        uint64_t x = r.u64be();
        uint64_t y = r.u64be();
        if (tag == 0) {
            if (x != 0 || y != 0) throw SubgroupError("non-canonical infinity encoding");
            return make_infinity();
        }
        if (tag != 1) throw SubgroupError("unknown point encoding tag");
        GroupElement e = make(x, y);
        if (!on_curve(e)) throw SubgroupError("point is not on the curve");
        return e;
    }

    void encode_target(const TargetElement& t, ByteWriter& w) const override {
        w.u64be(t.c0);
        w.u64be(t.c1);
    }

    TargetElement decode_target_impl(ByteReader& r) const override {
        uint64_t c0 = r.u64be();
        uint64_t c1 = r.u64be();
        if (!base_.canonical(c0) || !base_.canonical(c1))
            throw SubgroupError("target coordinates not canonical");
        return make_target(Fp2{c0, c1});
    }

private:
    // Deterministic: walk x = 1, 2, ... until x^3 + x is a nonzero
    // square, take the smaller root, clear the cofactor.
    GroupElement find_generator() const {
        uint64_t p = p_;
        for (uint64_t x = 1; x < p; ++x) {
            uint64_t t = base_.add(base_.mul(base_.mul(x, x), x), x);
            if (t == 0) continue;
            uint64_t y = base_.pow(t, (p + 1) / 4);
            if (base_.mul(y, y) != t) continue;
            if (p - y < y) y = p - y;
            GroupElement candidate = mul_any(cofactor_, make(x, y));
            if (!candidate.infinity) return candidate;
        }
        throw FieldError("no generator found for curve suite");
    }

    PrimeField base_;
    uint64_t p_;
    uint64_t cofactor_;
};

} // namespace

SuitePtr make_curve_suite(uint64_t p, uint64_t q, bool counting) {
    return std::make_shared<CurveSuite>(p, q, counting);
}

SuitePtr make_curve43_suite(bool counting) { return make_curve_suite(43, 11, counting); }

SuitePtr make_curve_large_suite(bool counting) {
    return make_curve_suite(2147486203ULL, 536871551ULL, counting);
}

} // namespace gauth
