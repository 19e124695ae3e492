#include "gauth/protocol.hpp"

#include <algorithm>
#include <set>

#include "gauth/errors.hpp"

namespace gauth {

void GroupPolicy::validate() const {
    if (t < 1) throw PolicyError("threshold t must be at least 1");
    if (!(t < m && m < n)) throw PolicyError("policy requires t < m < n");
}

const char* verdict_name(Verdict v) {
    return v == Verdict::Accepted ? "accepted" : "rejected";
}

const RegistryEntry& GMState::entry_for(const MemberId& member) const {
    for (const RegistryEntry& e : registry)
        if (e.member == member) return e;
    throw UnknownMemberError("member id not in the share registry");
}

const RegistryEntry& GMState::entry_at(uint64_t x) const {
    for (const RegistryEntry& e : registry)
        if (e.x == x) return e;
    throw ValidationError("registry has no such index");
}

Bytes GMState::encode() const {
    ByteWriter w;
    w.raw(params.group);
    w.u64be(params.suite->suite_id());
    w.u32be(params.policy.t);
    w.u32be(params.policy.m);
    w.u32be(params.policy.n);
    w.u32be(epoch);
    w.raw(params.suite->encode(params.p));
    w.raw(params.suite->encode(params.q_point));
    w.u32be(static_cast<uint32_t>(poly.coefficients().size()));
    for (uint64_t c : poly.coefficients()) w.u64be(c);
    w.u32be(static_cast<uint32_t>(registry.size()));
    for (const RegistryEntry& e : registry) {
        w.u64be(e.x);
        w.raw(e.member);
        w.u8(e.used_for_auth ? 1 : 0);
        w.u8(e.used_for_handover ? 1 : 0);
    }
    w.u32be(static_cast<uint32_t>(cache.size()));
    for (const Commitment& c : cache) {
        w.raw(c.member);
        w.raw(params.suite->encode(c.point));
    }
    w.u8(outstanding ? 1 : 0);
    if (outstanding) {
        w.raw(outstanding->issuer);
        w.u32be(outstanding->epoch);
        w.u64be(outstanding->x);
        w.raw(params.suite->encode(outstanding->point));
        w.u8(outstanding->consumed ? 1 : 0);
    }
    w.u32be(static_cast<uint32_t>(peer_credentials.size()));
    for (const auto& [issuer, cred] : peer_credentials) {
        w.raw(issuer);
        w.u32be(cred.epoch);
        w.u64be(cred.x);
        w.raw(params.suite->encode(cred.point));
        w.u8(cred.consumed ? 1 : 0);
    }
    w.u32be(static_cast<uint32_t>(admitted.size()));
    for (const AdmittedMember& a : admitted) {
        w.raw(a.member);
        w.u64be(a.x);
        w.raw(params.suite->encode(a.point));
        w.u32be(a.epoch);
    }
    return w.take();
}

namespace {

InitOutput build_group(const GroupPolicy& policy, const SuitePtr& suite, const GroupId& group,
                       std::span<const MemberId> member_ids, Polynomial poly, uint32_t epoch) {
    policy.validate();
    if (member_ids.size() != policy.n)
        throw PolicyError("member id count must equal the enrolled count n");
    std::vector<MemberId> ids(member_ids.begin(), member_ids.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ValidationError("duplicate member id");
    if (poly.threshold() != policy.t)
        throw PolicyError("polynomial threshold does not match the policy");
    if (!(poly.field() == suite->scalar_field()))
        throw FieldError("polynomial field does not match the suite's scalar field");
    if (suite->scalar_field().modulus() <= policy.n)
        throw PolicyError("field too small for n distinct nonzero indices");

    InitOutput out{GMState{GroupPublicParams{}, poly, 0, {}, {}, {}, {}, {}}, GroupPublicParams{}, {}};
    GMState& st = out.state;
    st.params.group = group;
    st.params.suite = suite;
    st.params.p = suite->generator();
    st.params.q_point = suite->scalar_mul(poly.secret(), suite->generator());
    st.params.policy = policy;
    st.epoch = epoch;

    for (uint32_t i = 0; i < policy.n; ++i) {
        uint64_t x = i + 1;
        MemberCredential cred;
        cred.group = group;
        cred.member = ids[i];
        cred.x = x;
        cred.y = poly_eval(poly, x);
        out.credentials.push_back(cred);
        st.registry.push_back(RegistryEntry{x, ids[i], false, false});
    }
    out.params = st.params;
    return out;
}

} // namespace

InitOutput gm_init(const GroupPolicy& policy, const SuitePtr& suite, const GroupId& group,
                   std::span<const MemberId> member_ids, DetRng& rng) {
    policy.validate();
    Polynomial poly = sample_polynomial(suite->scalar_field(), policy.t, rng);
    return build_group(policy, suite, group, member_ids, std::move(poly), 0);
}

InitOutput gm_init_with_polynomial(const GroupPolicy& policy, const SuitePtr& suite,
                                   const GroupId& group, std::span<const MemberId> member_ids,
                                   Polynomial poly) {
    return build_group(policy, suite, group, member_ids, std::move(poly), 0);
}

Commitment member_commit(const MemberCredential& cred, const GroupSuite& suite) {
    Commitment c;
    c.group = cred.group;
    c.member = cred.member;
    c.point = suite.scalar_mul(cred.y, suite.generator());
    return c;
}

AuthResult gm_collect_and_verify(GMState& state, std::span<const Commitment> commitments) {
    const GroupSuite& suite = *state.params.suite;
    if (commitments.size() < state.params.policy.t)
        throw QuorumError("fewer commitments than the threshold t");

    std::vector<uint64_t> xs;
    std::set<uint64_t> seen;
    AuthResult result;
    for (const Commitment& c : commitments) {
        if (c.group != state.params.group)
            throw ValidationError("commitment addressed to a different group");
        const RegistryEntry& entry = state.entry_for(c.member);
        if (!seen.insert(entry.x).second)
            throw ValidationError("duplicate commitment from one member");
        if (!suite.in_subgroup(c.point))
            throw SubgroupError("commitment point outside the order-q subgroup");
        if (c.point == suite.identity()) result.suspicious.push_back(c.member);
        xs.push_back(entry.x);
    }

    std::vector<uint64_t> lambdas = lagrange_coefficients_at_zero(suite.scalar_field(), xs);
    GroupElement sum = suite.identity();
    for (size_t i = 0; i < commitments.size(); ++i)
        sum = suite.add(sum, suite.scalar_mul(lambdas[i], commitments[i].point));

    if (sum == state.params.q_point) {
        result.verdict = Verdict::Accepted;
        std::vector<Commitment> cache(commitments.begin(), commitments.end());
        std::sort(cache.begin(), cache.end(), [&](const Commitment& a, const Commitment& b) {
            return state.entry_for(a.member).x < state.entry_for(b.member).x;
        });
        state.cache = std::move(cache);
        for (RegistryEntry& e : state.registry)
            e.used_for_auth = seen.count(e.x) != 0;
    } else {
        result.verdict = Verdict::Rejected;
    }
    return result;
}

InitOutput gm_reinitialize(GMState& state, DetRng& rng) {
    std::vector<MemberId> ids;
    for (const RegistryEntry& e : state.registry) ids.push_back(e.member);
    Polynomial poly = sample_polynomial(state.params.suite->scalar_field(),
                                        state.params.policy.t, rng);
    InitOutput out = build_group(state.params.policy, state.params.suite, state.params.group,
                                 ids, std::move(poly), state.epoch + 1);
    out.state.peer_credentials = state.peer_credentials;
    state = out.state;
    return out;
}

SessionKey derive_session_key(const MemberCredential& own, const Commitment& peer,
                              const GroupPublicParams& params) {
    const GroupSuite& suite = *params.suite;
    if (peer.group != own.group || peer.group != params.group)
        throw ValidationError("credential, commitment and params disagree on the group");
    if (peer.point == suite.identity())
        throw DegenerateKeyError("peer commitment is the identity point");
    SessionKey key;
    key.value = suite.pairing(suite.scalar_mul(own.y, peer.point), params.q_point);
    key.sender = own.member;
    key.receiver = peer.member;
    if (key.value == suite.target_identity())
        throw DegenerateKeyError("session key would be the target identity");
    return key;
}

Bytes encode_commitment(const Commitment& c, const GroupSuite& suite) {
    ByteWriter w;
    w.raw(c.group);
    w.raw(c.member);
    w.raw(suite.encode(c.point));
    return w.take();
}

Commitment decode_commitment(std::span<const uint8_t> data, const GroupSuite& suite) {
    ByteReader r(data);
    Commitment c;
    Bytes g = r.raw(c.group.size());
    std::copy(g.begin(), g.end(), c.group.begin());
    Bytes m = r.raw(c.member.size());
    std::copy(m.begin(), m.end(), c.member.begin());
    c.point = suite.decode_element(r.raw(suite.element_size()));
    if (!r.done()) throw ValidationError("trailing bytes after commitment");
    return c;
}

} // namespace gauth
