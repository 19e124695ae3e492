// Hand-over life cycle: issue from an unused index, single-use verify
// against the cached round, refresh-on-attempt, capacity exhaustion,
// and the peer-GM bookkeeping (register / fetch / notice).

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gauth/errors.hpp"
#include "gauth/group.hpp"
#include "gauth/handover.hpp"
#include "gauth/protocol.hpp"
#include "gauth/rng.hpp"

using namespace gauth;

namespace {

constexpr uint64_t kM61 = 2305843009213693951ULL;

std::vector<MemberId> members(std::initializer_list<const char*> labels) {
    std::vector<MemberId> out;
    for (const char* l : labels) out.push_back(member_id_from_label(l));
    return out;
}

// The q = 13 worked group: f(x) = 5 + 3x, members A..D at x = 1..4,
// shares 8, 11, 1, 4. Quorum {A, B} is cached as the accepted round.
InitOutput worked_group(const SuitePtr& suite) {
    GroupPolicy policy{2, 3, 4};
    auto ids = members({"A", "B", "C", "D"});
    Polynomial f(suite->scalar_field(), {5, 3});
    return gm_init_with_polynomial(policy, suite, group_id_from_label("G2"), ids, std::move(f));
}

std::vector<Commitment> commit_all(const InitOutput& out, size_t count) {
    std::vector<Commitment> round;
    for (size_t i = 0; i < count; ++i)
        round.push_back(member_commit(out.credentials[i], *out.params.suite));
    return round;
}

} // namespace

TEST_CASE("hand-over worked example: issue x=3, enlarged-set verify accepts") {
    auto suite = make_mock_suite(13);
    InitOutput out = worked_group(suite);
    GMState& gm = out.state;

    auto round = commit_all(out, 2); // A, B at x = 1, 2
    REQUIRE(gm_collect_and_verify(gm, round).verdict == Verdict::Accepted);

    HandoverCredential cred = handover_issue(gm);
    CHECK(cred.issuer == gm.params.group);
    CHECK(cred.epoch == 0);
    CHECK(cred.x == 3); // lowest index not consumed by the round
    // f(3) = 5 + 9 = 14 = 1 (mod 13)
    CHECK(cred.point == suite->scalar_mul(1, suite->generator()));
    CHECK_FALSE(cred.consumed);
    CHECK(gm.entry_at(3).used_for_handover);

    MemberId roamer = member_id_from_label("E-roam");
    HandoverMessage msg = handover_present(roamer, cred);
    CHECK(msg.member == roamer);
    CHECK(msg.x == cred.x);

    // Lagrange over {1, 2, 3} is (3, 10, 1): 3*8 + 10*11 + 1*1 = 135 = 5 = s.
    CHECK(handover_verify(gm, msg) == Verdict::Accepted);
    REQUIRE(admitted_members(gm).size() == 1);
    const AdmittedMember& adm = admitted_members(gm)[0];
    CHECK(adm.member == roamer);
    CHECK(adm.x == 3);
    CHECK(adm.point == cred.point);
    CHECK(adm.epoch == 0);
}

TEST_CASE("hand-over verify is single-use; refresh rotates to the next index") {
    auto suite = make_mock_suite(13);
    InitOutput out = worked_group(suite);
    GMState& gm = out.state;
    REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);

    HandoverCredential first = handover_issue(gm);
    HandoverMessage msg = handover_present(member_id_from_label("E-roam"), first);
    REQUIRE(handover_verify(gm, msg) == Verdict::Accepted);

    // The attempt consumed the credential: replaying the same message fails.
    CHECK_THROWS_AS(handover_verify(gm, msg), ReplayError);

    // Refresh issues the next unused index: x = 4, f(4) = 17 = 4 (mod 13).
    HandoverCredential second = handover_refresh(gm);
    CHECK(second.x == 4);
    CHECK(second.point == suite->scalar_mul(4, suite->generator()));

    // The stale first credential no longer matches the outstanding one.
    HandoverMessage stale = handover_present(member_id_from_label("F-roam"), first);
    CHECK_THROWS_AS(handover_verify(gm, stale), ReplayError);

    // The fresh credential verifies, after which the registry is spent:
    // x = 1, 2 used by the round, x = 3, 4 by hand-over.
    HandoverMessage fresh = handover_present(member_id_from_label("F-roam"), second);
    CHECK(handover_verify(gm, fresh) == Verdict::Accepted);
    CHECK(admitted_members(gm).size() == 2);
    CHECK_THROWS_AS(handover_refresh(gm), CapacityError);
}

TEST_CASE("forged presentation points: exactly one candidate of q accepts") {
    auto suite = make_mock_suite(13);
    InitOutput out = worked_group(suite);
    GMState& gm = out.state;
    REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);
    HandoverCredential cred = handover_issue(gm); // x = 3, true share 1

    size_t accepted = 0;
    uint64_t accepted_log = 13;
    for (uint64_t d = 0; d < 13; ++d) {
        GMState attempt = gm; // fresh copy: each forgery gets one try
        HandoverMessage msg = handover_present(member_id_from_label("mallory"), cred);
        msg.point = suite->scalar_mul(d, suite->generator());
        if (handover_verify(attempt, msg) == Verdict::Accepted) {
            ++accepted;
            accepted_log = d;
            CHECK(admitted_members(attempt).size() == 1);
        } else {
            CHECK(admitted_members(attempt).empty());
        }
    }
    CHECK(accepted == 1);
    CHECK(accepted_log == 1); // only the true share f(3) = 1 passes
}

TEST_CASE("a rejected attempt still consumes the credential") {
    auto suite = make_mock_suite(13);
    InitOutput out = worked_group(suite);
    GMState& gm = out.state;
    REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);
    HandoverCredential cred = handover_issue(gm);

    HandoverMessage msg = handover_present(member_id_from_label("mallory"), cred);
    msg.point = suite->add(msg.point, suite->generator()); // off by one generator
    CHECK(handover_verify(gm, msg) == Verdict::Rejected);
    CHECK(admitted_members(gm).empty());

    // Consumed by the failed attempt: replay throws, refresh proceeds.
    CHECK_THROWS_AS(handover_verify(gm, msg), ReplayError);
    HandoverCredential next = handover_refresh(gm);
    CHECK(next.x == 4);
}

TEST_CASE("issue and refresh preconditions") {
    auto suite = make_mock_suite(13);

    SUBCASE("issue requires a cached accepted round") {
        InitOutput out = worked_group(suite);
        CHECK_THROWS_WITH_AS(handover_issue(out.state),
                             "hand-over requires a cached accepted round", ValidationError);
    }
    SUBCASE("refresh requires a consumed attempt") {
        InitOutput out = worked_group(suite);
        REQUIRE(gm_collect_and_verify(out.state, commit_all(out, 2)).verdict ==
                Verdict::Accepted);
        // No issue yet.
        CHECK_THROWS_AS(handover_refresh(out.state), ValidationError);
        // Issued but not yet presented.
        handover_issue(out.state);
        CHECK_THROWS_AS(handover_refresh(out.state), ValidationError);
    }
}

TEST_CASE("verify guards: foreign issuer, stale epoch, index collision") {
    auto suite = make_mock_suite(13);

    SUBCASE("credential from a different group") {
        InitOutput out = worked_group(suite);
        GMState& gm = out.state;
        REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);
        HandoverCredential cred = handover_issue(gm);
        HandoverMessage msg = handover_present(member_id_from_label("E-roam"), cred);
        msg.issuer = group_id_from_label("G9");
        CHECK_THROWS_AS(handover_verify(gm, msg), ValidationError);
    }
    SUBCASE("reinitialization invalidates the old epoch before replay checks") {
        InitOutput out = worked_group(suite);
        GMState& gm = out.state;
        REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);
        HandoverMessage msg =
            handover_present(member_id_from_label("E-roam"), handover_issue(gm));
        DetRng rng(99);
        gm_reinitialize(gm, rng);
        CHECK(gm.epoch == 1);
        CHECK_THROWS_AS(handover_verify(gm, msg), EpochError);
    }
    SUBCASE("presented index colliding with the cached round") {
        InitOutput out = worked_group(suite);
        GMState& gm = out.state;
        REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);
        HandoverCredential cred = handover_issue(gm); // x = 3 while C is idle
        // C then authenticates, pulling x = 3 into the cached round.
        REQUIRE(gm_collect_and_verify(gm, commit_all(out, 3)).verdict == Verdict::Accepted);
        HandoverMessage msg = handover_present(member_id_from_label("E-roam"), cred);
        CHECK_THROWS_AS(handover_verify(gm, msg), IndexCollisionError);
    }
}

TEST_CASE("peer-GM bookkeeping: register, fetch, consume by notice") {
    auto suite = make_mock_suite(13);
    InitOutput issuer = worked_group(suite);
    REQUIRE(gm_collect_and_verify(issuer.state, commit_all(issuer, 2)).verdict ==
            Verdict::Accepted);
    HandoverCredential cred = handover_issue(issuer.state);

    // The roaming member's home GM (a different group) holds the credential.
    GroupPolicy policy{2, 3, 4};
    auto ids = members({"W", "X", "Y", "Z"});
    Polynomial f(suite->scalar_field(), {7, 2});
    InitOutput home = gm_init_with_polynomial(policy, suite, group_id_from_label("G1"), ids,
                                              std::move(f));

    handover_register(home.state, cred);
    const HandoverCredential& held = handover_fetch(home.state, cred.issuer);
    CHECK(held.x == cred.x);
    CHECK(held.point == cred.point);

    SUBCASE("a GM never holds its own credential as a peer") {
        CHECK_THROWS_AS(handover_register(issuer.state, cred), ValidationError);
    }
    SUBCASE("fetching an unknown issuer fails") {
        CHECK_THROWS_AS(handover_fetch(home.state, group_id_from_label("G9")),
                        ValidationError);
    }
    SUBCASE("a matching peer notice consumes the held credential") {
        PeerNotice notice{cred.issuer, cred.epoch, cred.x};
        handover_apply_notice(home.state, notice);
        CHECK_THROWS_AS(handover_fetch(home.state, cred.issuer), ReplayError);
    }
    SUBCASE("a notice for a different index or epoch is ignored") {
        handover_apply_notice(home.state, PeerNotice{cred.issuer, cred.epoch, cred.x + 1});
        handover_apply_notice(home.state, PeerNotice{cred.issuer, cred.epoch + 1, cred.x});
        handover_apply_notice(home.state, PeerNotice{group_id_from_label("G9"), cred.epoch,
                                                     cred.x});
        CHECK(handover_fetch(home.state, cred.issuer).x == cred.x);
    }
}

TEST_CASE("hand-over wire formats round-trip and reject trailing bytes") {
    auto suite = make_mock_suite(13);
    InitOutput out = worked_group(suite);
    GMState& gm = out.state;
    REQUIRE(gm_collect_and_verify(gm, commit_all(out, 2)).verdict == Verdict::Accepted);
    HandoverMessage msg =
        handover_present(member_id_from_label("E-roam"), handover_issue(gm));

    Bytes wire = encode_handover_message(msg, *suite);
    HandoverMessage back = decode_handover_message(wire, *suite);
    CHECK(back.issuer == msg.issuer);
    CHECK(back.epoch == msg.epoch);
    CHECK(back.x == msg.x);
    CHECK(back.member == msg.member);
    CHECK(back.point == msg.point);

    wire.push_back(0);
    CHECK_THROWS_AS(decode_handover_message(wire, *suite), ValidationError);

    PeerNotice notice{msg.issuer, msg.epoch, msg.x};
    Bytes nwire = encode_peer_notice(notice);
    PeerNotice nback = decode_peer_notice(nwire);
    CHECK(nback.group == notice.group);
    CHECK(nback.epoch == notice.epoch);
    CHECK(nback.x == notice.x);
    nwire.push_back(0);
    CHECK_THROWS_AS(decode_peer_notice(nwire), ValidationError);
}

TEST_CASE("hand-over on the pairing curve and at a 61-bit field") {
    SUBCASE("tiny curve group") {
        auto suite = make_curve_suite(43, 11);
        GroupPolicy policy{2, 3, 4};
        auto ids = members({"A", "B", "C", "D"});
        Polynomial f(suite->scalar_field(), {1, 2}); // shares 3, 5, 7, 9
        InitOutput out = gm_init_with_polynomial(policy, suite, group_id_from_label("G1"),
                                                 ids, std::move(f));
        REQUIRE(gm_collect_and_verify(out.state, commit_all(out, 2)).verdict ==
                Verdict::Accepted);
        HandoverCredential cred = handover_issue(out.state); // x = 3, f(3) = 7
        CHECK(cred.point == suite->scalar_mul(7, suite->generator()));
        HandoverMessage msg = handover_present(member_id_from_label("E-roam"), cred);
        CHECK(handover_verify(out.state, msg) == Verdict::Accepted);
    }
    SUBCASE("randomized 61-bit trials") {
        auto suite = make_mock_suite(kM61);
        DetRng rng(20260817);
        for (int trial = 0; trial < 50; ++trial) {
            uint32_t n = 4 + rng.below(5); // 4..8
            uint32_t t = 2 + static_cast<uint32_t>(rng.below(n - 2)); // 2..n-1
            uint32_t m = t + 1 + static_cast<uint32_t>(rng.below(n - t)); // t < m <= n
            if (m >= n) m = n - 1;
            if (m <= t) continue;
            std::vector<MemberId> ids;
            for (uint32_t i = 0; i < n; ++i)
                ids.push_back(member_id_from_label("N" + std::to_string(10 + i)));
            InitOutput out = gm_init(GroupPolicy{t, m, n}, suite,
                                     group_id_from_label("GR"), ids, rng);
            auto round = commit_all(out, t); // minimal quorum x = 1..t
            REQUIRE(gm_collect_and_verify(out.state, round).verdict == Verdict::Accepted);

            HandoverCredential cred = handover_issue(out.state);
            CHECK(cred.x == t + 1);
            HandoverMessage msg = handover_present(member_id_from_label("E-roam"), cred);
            CHECK(handover_verify(out.state, msg) == Verdict::Accepted);

            // A random nonzero perturbation of the next credential is rejected.
            HandoverCredential next = handover_refresh(out.state);
            HandoverMessage forged = handover_present(member_id_from_label("mallory"), next);
            uint64_t delta = 1 + out.params.suite->scalar_field().sample(rng) % (kM61 - 1);
            forged.point = suite->add(forged.point, suite->scalar_mul(delta, suite->generator()));
            CHECK(handover_verify(out.state, forged) == Verdict::Rejected);
        }
    }
}
