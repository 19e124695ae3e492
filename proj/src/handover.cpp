#include "gauth/handover.hpp"

#include <algorithm>

#include "gauth/errors.hpp"

namespace gauth {

namespace {

uint64_t lowest_unused_index(const GMState& state) {
    for (const RegistryEntry& e : state.registry)
        if (!e.used_for_auth && !e.used_for_handover) return e.x;
    throw CapacityError("share registry exhausted: all n indices consumed");
}

} // namespace

HandoverCredential handover_issue(GMState& state) {
    if (!state.has_cache())
        throw ValidationError("hand-over requires a cached accepted round");
    uint64_t x = lowest_unused_index(state);
    for (RegistryEntry& e : state.registry)
        if (e.x == x) e.used_for_handover = true;
    HandoverCredential cred;
    cred.issuer = state.params.group;
    cred.epoch = state.epoch;
    cred.x = x;
    cred.point = state.params.suite->scalar_mul(poly_eval(state.poly, x),
                                                state.params.suite->generator());
    state.outstanding = cred;
    return cred;
}

HandoverMessage handover_present(const MemberId& member, const HandoverCredential& cred) {
    HandoverMessage msg;
    msg.issuer = cred.issuer;
    msg.epoch = cred.epoch;
    msg.x = cred.x;
    msg.member = member;
    msg.point = cred.point;
    return msg;
}

Verdict handover_verify(GMState& state, const HandoverMessage& msg) {
    if (msg.issuer != state.params.group)
        throw ValidationError("credential was issued by a different group");
    if (msg.epoch != state.epoch)
        throw EpochError("credential epoch does not match the current epoch");
    if (!state.outstanding || state.outstanding->consumed || state.outstanding->x != msg.x)
        throw ReplayError("no outstanding credential matches; replay or stale index");
    state.outstanding->consumed = true; // the attempt itself consumes it

    const GroupSuite& suite = *state.params.suite;
    std::vector<uint64_t> xs;
    std::vector<GroupElement> points;
    for (const Commitment& c : state.cache) {
        uint64_t x = state.entry_for(c.member).x;
        if (x == msg.x) throw IndexCollisionError("hand-over index collides with the cached round");
        xs.push_back(x);
        points.push_back(c.point);
    }
    xs.push_back(msg.x);
    points.push_back(msg.point);

    std::vector<uint64_t> lambdas = lagrange_coefficients_at_zero(suite.scalar_field(), xs);
    GroupElement sum = suite.identity();
    for (size_t i = 0; i < xs.size(); ++i)
        sum = suite.add(sum, suite.scalar_mul(lambdas[i], points[i]));

    if (!(sum == state.params.q_point)) return Verdict::Rejected;
    state.admitted.push_back(AdmittedMember{msg.member, msg.x, msg.point, state.epoch});
    return Verdict::Accepted;
}

HandoverCredential handover_refresh(GMState& state) {
    if (!state.outstanding || !state.outstanding->consumed)
        throw ValidationError("refresh follows a hand-over attempt");
    return handover_issue(state);
}

void handover_register(GMState& state, const HandoverCredential& cred) {
    if (cred.issuer == state.params.group)
        throw ValidationError("a GM does not hold its own credential as a peer");
    state.peer_credentials[cred.issuer] = cred;
}

const HandoverCredential& handover_fetch(const GMState& state, const GroupId& issuer) {
    auto it = state.peer_credentials.find(issuer);
    if (it == state.peer_credentials.end())
        throw ValidationError("no credential registered for that issuer");
    if (it->second.consumed)
        throw ReplayError("registered credential already consumed");
    return it->second;
}

void handover_apply_notice(GMState& state, const PeerNotice& notice) {
    auto it = state.peer_credentials.find(notice.group);
    if (it == state.peer_credentials.end()) return;
    if (it->second.epoch == notice.epoch && it->second.x == notice.x)
        it->second.consumed = true;
}

std::span<const AdmittedMember> admitted_members(const GMState& state) {
    return state.admitted;
}

Bytes encode_handover_message(const HandoverMessage& msg, const GroupSuite& suite) {
    ByteWriter w;
    w.raw(msg.issuer);
    w.u32be(msg.epoch);
    w.u64be(msg.x);
    w.raw(msg.member);
    w.raw(suite.encode(msg.point));
    return w.take();
}

HandoverMessage decode_handover_message(std::span<const uint8_t> data, const GroupSuite& suite) {
    ByteReader r(data);
    HandoverMessage msg;
    Bytes g = r.raw(msg.issuer.size());
    std::copy(g.begin(), g.end(), msg.issuer.begin());
    msg.epoch = r.u32be();
    msg.x = r.u64be();
    Bytes m = r.raw(msg.member.size());
    std::copy(m.begin(), m.end(), msg.member.begin());
    msg.point = suite.decode_element(r.raw(suite.element_size()));
    if (!r.done()) throw ValidationError("trailing bytes after hand-over message");
    return msg;
}

Bytes encode_peer_notice(const PeerNotice& notice) {
    ByteWriter w;
    w.raw(notice.group);
    w.u32be(notice.epoch);
    w.u64be(notice.x);
    return w.take();
}

PeerNotice decode_peer_notice(std::span<const uint8_t> data) {
    ByteReader r(data);
    PeerNotice notice;
    Bytes g = r.raw(notice.group.size());
    std::copy(g.begin(), g.end(), notice.group.begin());
    notice.epoch = r.u32be();
    notice.x = r.u64be();
    if (!r.done()) throw ValidationError("trailing bytes after peer notice");
    return notice;
}

} // namespace gauth
