#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gauth/field.hpp"
#include "gauth/group.hpp"
#include "gauth/polynomial.hpp"
#include "gauth/protocol.hpp"
#include "gauth/rng.hpp"

namespace gauth {

/// Harn's (t, n) baseline: same Shamir polynomial, but members release
/// their shares (x_i, f(x_i)) in cleartext during authentication. That
/// is the weakness the share-capture attack exploits.
struct HarnGroup {
    PrimeField field;
    Polynomial poly;
    uint32_t t = 0;
    uint32_t n = 0;
    std::vector<std::pair<uint64_t, uint64_t>> shares; // (x_i, y_i), x = 1..n

    uint64_t secret() const { return poly.secret(); }
};

/// Sample f of degree t-1 and deal shares at x = 1..n. Requires
/// 1 <= t <= n and a field larger than n.
HarnGroup harn_init(uint32_t t, uint32_t n, const PrimeField& field, DetRng& rng);

/// Interpolate the released shares and compare against the dealer's
/// secret. Throws QuorumError below t shares.
Verdict harn_authenticate(const HarnGroup& group,
                          std::span<const std::pair<uint64_t, uint64_t>> released);

/// Outcome of a share-capture attack: the recovered secret and the full
/// reconstructed polynomial.
struct ChienResult {
    uint64_t secret = 0;
    Polynomial poly;
};

/// The k-distinct-values attack on the baseline: t observed cleartext
/// shares determine f completely. Throws QuorumError below t pairs.
ChienResult chien_attack_harn(const PrimeField& field,
                              std::span<const std::pair<uint64_t, uint64_t>> observed, uint32_t t);

/// The same attack pointed at the proposed scheme's transcript, where
/// only masked shares f(x_i)*P are visible. Extraction is a discrete
/// log per point: brute-forced when q fits under work_bound, refused
/// with DlBoundError otherwise.
ChienResult chien_attack_masked(const GroupSuite& suite,
                                std::span<const std::pair<uint64_t, GroupElement>> observed,
                                uint32_t t, uint64_t work_bound = uint64_t{1} << 20);

/// Closed-form costs behind the comparison figure, in T_mul,q units.
enum class CostScheme { Harn, Chien, Proposed };

const char* cost_scheme_name(CostScheme scheme);

/// harn: 45m + 1418; chien: 7m + 6785; proposed: flat 1189. m >= 1.
uint64_t cost_model(CostScheme scheme, uint64_t m);

struct CostRow {
    CostScheme scheme;
    uint64_t m = 0;
    uint64_t cost = 0;
};

/// Rows for m in [m_min, m_max], grouped per m in scheme order
/// harn, chien, proposed.
std::vector<CostRow> cost_table(uint64_t m_min, uint64_t m_max);

/// Field multiplications one member_commit spends on a counting suite,
/// for a credential with private share y. The suite must have counting
/// enabled; the count depends only on the bit width of y.
uint64_t measured_member_cost(const SuitePtr& suite, uint64_t y);

} // namespace gauth
