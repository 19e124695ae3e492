#pragma once

#include <cstdint>
#include <span>

#include "gauth/protocol.hpp"

namespace gauth {

/// What a roaming member presents to the target GM: the target group's
/// standing credential plus the member's own identity.
struct HandoverMessage {
    GroupId issuer{};
    uint32_t epoch = 0;
    uint64_t x = 0;
    MemberId member{};
    GroupElement point;

    bool operator==(const HandoverMessage&) const = default;
};

/// Sent to peer GMs after a hand-over attempt: which index was consumed.
struct PeerNotice {
    GroupId group{};
    uint32_t epoch = 0;
    uint64_t x = 0;
};

/// Hand-over Step 1: pick the lowest index unused by the last accepted
/// round and by previous issuance, mark it used-for-handover, return
/// f(x)*P as the standing credential for secure distribution to peer
/// GMs. Throws CapacityError when every index is consumed.
HandoverCredential handover_issue(GMState& state);

/// Steps 2-3: the roaming member wraps the credential it obtained from
/// its own GM together with its identity.
HandoverMessage handover_present(const MemberId& member, const HandoverCredential& cred);

/// Steps 4-6: verify over the enlarged point set. The credential is
/// consumed by the attempt, accepted or not. Epoch mismatch, index
/// collision with the cached round, and replay of a consumed credential
/// throw before any group arithmetic; a wrong point simply fails the
/// sum check and returns Rejected.
Verdict handover_verify(GMState& state, const HandoverMessage& msg);

/// Steps 7-8: after any attempt ("Even if it holds or not"), retire the
/// outstanding credential and issue the next unused index.
HandoverCredential handover_refresh(GMState& state);

/// Peer-GM bookkeeping: store the credential a peer GM distributed so a
/// departing member can pick it up, and apply a consumed-index notice.
void handover_register(GMState& state, const HandoverCredential& cred);
const HandoverCredential& handover_fetch(const GMState& state, const GroupId& issuer);
void handover_apply_notice(GMState& state, const PeerNotice& notice);

/// Members admitted into this group by accepted hand-overs this epoch.
/// Their presented point doubles as a commitment for key derivation.
std::span<const AdmittedMember> admitted_members(const GMState& state);

/// Wire format: [issuer 8][epoch 4][index 8][member 16][point]. GM-to-GM
/// distribution uses the same layout with a zeroed member id.
Bytes encode_handover_message(const HandoverMessage& msg, const GroupSuite& suite);
HandoverMessage decode_handover_message(std::span<const uint8_t> data, const GroupSuite& suite);

Bytes encode_peer_notice(const PeerNotice& notice);
PeerNotice decode_peer_notice(std::span<const uint8_t> data);

} // namespace gauth
