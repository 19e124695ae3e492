#include "gauth/baselines.hpp"

#include "gauth/errors.hpp"
#include "gauth/lagrange.hpp"

namespace gauth {

HarnGroup harn_init(uint32_t t, uint32_t n, const PrimeField& field, DetRng& rng) {
    if (t < 1 || t > n) throw PolicyError("harn baseline requires 1 <= t <= n");
    if (field.modulus() <= n) throw PolicyError("field too small for n distinct nonzero indices");
    Polynomial poly = sample_polynomial(field, t, rng);
    HarnGroup group{field, poly, t, n, {}};
    for (uint32_t i = 1; i <= n; ++i)
        group.shares.emplace_back(i, poly_eval(poly, i));
    return group;
}

Verdict harn_authenticate(const HarnGroup& group,
                          std::span<const std::pair<uint64_t, uint64_t>> released) {
    if (released.size() < group.t) throw QuorumError("fewer shares than the threshold t");
    return interpolate_secret(group.field, released) == group.secret() ? Verdict::Accepted
                                                                       : Verdict::Rejected;
}

ChienResult chien_attack_harn(const PrimeField& field,
                              std::span<const std::pair<uint64_t, uint64_t>> observed,
                              uint32_t t) {
    if (observed.size() < t) throw QuorumError("attack needs t distinct observed shares");
    std::vector<std::pair<uint64_t, uint64_t>> pts(observed.begin(), observed.begin() + t);
    Polynomial poly = interpolate_polynomial(field, pts);
    return ChienResult{poly.secret(), std::move(poly)};
}

ChienResult chien_attack_masked(const GroupSuite& suite,
                                std::span<const std::pair<uint64_t, GroupElement>> observed,
                                uint32_t t, uint64_t work_bound) {
    if (observed.size() < t) throw QuorumError("attack needs t distinct observed points");
    uint64_t q = suite.scalar_field().modulus();
    if (q > work_bound)
        throw DlBoundError("discrete-log extraction refused: field order exceeds the work bound");
    std::vector<std::pair<uint64_t, uint64_t>> pts;
    for (size_t i = 0; i < t; ++i) {
        const auto& [x, point] = observed[i];
        // Exhaustive discrete log: walk d*P for d = 0..q-1.
        GroupElement acc = suite.identity();
        uint64_t log = q; // sentinel: not found
        for (uint64_t d = 0; d < q; ++d) {
            if (acc == point) {
                log = d;
                break;
            }
            acc = suite.add(acc, suite.generator());
        }
        if (log == q) throw SubgroupError("observed point is not a multiple of the generator");
        pts.emplace_back(x, log);
    }
    Polynomial poly = interpolate_polynomial(suite.scalar_field(), pts);
    return ChienResult{poly.secret(), std::move(poly)};
}

const char* cost_scheme_name(CostScheme scheme) {
    switch (scheme) {
        case CostScheme::Harn: return "harn";
        case CostScheme::Chien: return "chien";
        case CostScheme::Proposed: return "proposed";
    }
    throw ValidationError("unknown cost scheme");
}

uint64_t cost_model(CostScheme scheme, uint64_t m) {
    if (m < 1) throw ValidationError("cost model requires m >= 1");
    switch (scheme) {
        case CostScheme::Harn: return 45 * m + 1418;
        case CostScheme::Chien: return 7 * m + 6785;
        case CostScheme::Proposed: return 1189;
    }
    throw ValidationError("unknown cost scheme");
}

std::vector<CostRow> cost_table(uint64_t m_min, uint64_t m_max) {
    if (m_min < 1 || m_min > m_max) throw ValidationError("cost range requires 1 <= m_min <= m_max");
    std::vector<CostRow> rows;
    for (uint64_t m = m_min; m <= m_max; ++m)
        for (CostScheme s : {CostScheme::Harn, CostScheme::Chien, CostScheme::Proposed})
            rows.push_back(CostRow{s, m, cost_model(s, m)});
    return rows;
}

uint64_t measured_member_cost(const SuitePtr& suite, uint64_t y) {
    if (!suite->counting()) throw ValidationError("measurement needs a counting suite");
    MemberCredential cred;
    cred.group = GroupId{};
    cred.member = MemberId{};
    cred.x = 1;
    cred.y = y;
    suite->reset_counters();
    member_commit(cred, *suite);
    return suite->counters().field_mults;
}

} // namespace gauth
