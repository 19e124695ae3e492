#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gauth/group.hpp"
#include "gauth/ids.hpp"
#include "gauth/lagrange.hpp"
#include "gauth/polynomial.hpp"
#include "gauth/rng.hpp"

namespace gauth {

/// (t, m, n) threshold schema: n enrolled members, m expected
/// participants per round, t the interpolation threshold. The ordering
/// t < m < n is enforced at init; verification itself accepts any
/// quorum in [t, n].
struct GroupPolicy {
    uint32_t t = 0;
    uint32_t m = 0;
    uint32_t n = 0;

    /// Throws PolicyError unless 1 <= t < m < n.
    void validate() const;
};

/// Everything the GM publishes: generator P, Q = s*P, and the policy.
struct GroupPublicParams {
    GroupId group{};
    SuitePtr suite;
    GroupElement p;
    GroupElement q_point;
    GroupPolicy policy;
};

/// A member's share: public index x_i, private value y_i = f(x_i).
struct MemberCredential {
    GroupId group{};
    MemberId member{};
    uint64_t x = 0;
    uint64_t y = 0;
};

/// The masked share f(x_i)*P broadcast during authentication.
struct Commitment {
    GroupId group{};
    MemberId member{};
    GroupElement point;

    bool operator==(const Commitment&) const = default;
};

/// One slot of the GM's share registry. Index x is consumed either by
/// participating in the last accepted round (used_for_auth tracks that
/// round only) or by being issued as a hand-over credential
/// (used_for_handover is sticky within an epoch).
struct RegistryEntry {
    uint64_t x = 0;
    MemberId member{};
    bool used_for_auth = false;
    bool used_for_handover = false;
};

enum class Verdict { Accepted, Rejected };

const char* verdict_name(Verdict v);

/// Outcome of a verification round. suspicious lists members whose
/// commitment was the identity point: legal, but a zero share is worth
/// flagging.
struct AuthResult {
    Verdict verdict = Verdict::Rejected;
    std::vector<MemberId> suspicious;
};

/// Pairwise key e(y_i * y_j * P, Q), never the target identity.
struct SessionKey {
    TargetElement value;
    MemberId sender{};
    MemberId receiver{};
};

/// The standing hand-over credential a GM has issued from one of its
/// unused indices, plus its single-use bookkeeping.
struct HandoverCredential {
    GroupId issuer{};
    uint32_t epoch = 0;
    uint64_t x = 0;
    GroupElement point;
    bool consumed = false;
};

/// A member admitted from another group by an accepted hand-over,
/// recorded for session-key use. Its presented point doubles as a
/// commitment.
struct AdmittedMember {
    MemberId member{};
    uint64_t x = 0;
    GroupElement point;
    uint32_t epoch = 0;
};

/// Group Manager state. Single-writer: verify / reinitialize /
/// hand-over mutations for one group must not interleave.
struct GMState {
    GroupPublicParams params;
    Polynomial poly;
    uint32_t epoch = 0;
    std::vector<RegistryEntry> registry;           // indices 1..n in order
    std::vector<Commitment> cache;                 // last accepted round, sorted by x
    std::optional<HandoverCredential> outstanding; // credential awaiting use
    std::map<GroupId, HandoverCredential> peer_credentials; // held for roaming members
    std::vector<AdmittedMember> admitted;          // accepted hand-overs this epoch

    const RegistryEntry& entry_for(const MemberId& member) const;
    const RegistryEntry& entry_at(uint64_t x) const;
    bool has_cache() const { return !cache.empty(); }

    /// Canonical byte serialization of the full state (registry flags,
    /// cache, outstanding credential included); equal states serialize
    /// identically.
    Bytes encode() const;
};

/// Init Steps 1-6: sample f of degree t-1, assign x_i = 1..n in sorted
/// member-id order, publish Q = s*P, build the registry. Returns the
/// per-member credentials for secret distribution.
struct InitOutput {
    GMState state;
    GroupPublicParams params;
    std::vector<MemberCredential> credentials;
};

InitOutput gm_init(const GroupPolicy& policy, const SuitePtr& suite, const GroupId& group,
                   std::span<const MemberId> member_ids, DetRng& rng);

/// Same, but with a caller-supplied polynomial (worked examples, tests).
InitOutput gm_init_with_polynomial(const GroupPolicy& policy, const SuitePtr& suite,
                                   const GroupId& group, std::span<const MemberId> member_ids,
                                   Polynomial poly);

/// Auth Step 1: the whole of a member's work — one scalar
/// multiplication f(x_i)*P.
Commitment member_commit(const MemberCredential& cred, const GroupSuite& suite);

/// Auth Steps 2-3: weight each commitment by its Lagrange coefficient
/// at zero over the participant index set and compare the sum against
/// Q. On acceptance the commitment set is cached and the participant
/// indices are marked used-for-auth.
AuthResult gm_collect_and_verify(GMState& state, std::span<const Commitment> commitments);

/// Auth Step 4: after a rejected round, resample the polynomial,
/// reissue every credential, bump the epoch, clear caches.
InitOutput gm_reinitialize(GMState& state, DetRng& rng);

/// Key = e(y_own * peer_point, Q). Symmetric in the two members.
/// Throws DegenerateKeyError when the key would be the target identity.
SessionKey derive_session_key(const MemberCredential& own, const Commitment& peer,
                              const GroupPublicParams& params);

/// Commitment wire format: [group id 8][member id 16][point encoding].
Bytes encode_commitment(const Commitment& c, const GroupSuite& suite);
Commitment decode_commitment(std::span<const uint8_t> data, const GroupSuite& suite);

} // namespace gauth
