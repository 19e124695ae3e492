#pragma once

#include <stdexcept>
#include <string>

namespace gauth {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad field parameters or non-canonical scalar values.
struct FieldError : Error {
    using Error::Error;
};

/// Duplicate or zero evaluation points (zero is reserved for the secret).
struct DegenerateEvalPointError : Error {
    using Error::Error;
};

/// Group elements from different suites combined in one operation.
struct SuiteMismatchError : Error {
    using Error::Error;
};

/// Element is not a valid member of the order-q subgroup.
struct SubgroupError : Error {
    using Error::Error;
};

/// Group policy violation (t < m < n ordering, duplicate ids, t = 0).
struct PolicyError : Error {
    using Error::Error;
};

/// Fewer commitments or shares than the threshold t. Distinct from a
/// rejected verdict: a short quorum is not an attack signal.
struct QuorumError : Error {
    using Error::Error;
};

/// Commitment from a member id the registry does not know.
struct UnknownMemberError : Error {
    using Error::Error;
};

/// Share registry has no unused index left to issue.
struct CapacityError : Error {
    using Error::Error;
};

/// Single-use hand-over credential presented a second time.
struct ReplayError : Error {
    using Error::Error;
};

/// Credential epoch does not match the verifier's current epoch.
struct EpochError : Error {
    using Error::Error;
};

/// Hand-over index collides with the cached participant set.
struct IndexCollisionError : Error {
    using Error::Error;
};

/// Session key would be the target-group identity.
struct DegenerateKeyError : Error {
    using Error::Error;
};

/// Secure-channel integrity tag failed to verify.
struct IntegrityError : Error {
    using Error::Error;
};

/// Discrete-log extraction refused: field order exceeds the work bound.
struct DlBoundError : Error {
    using Error::Error;
};

/// Scenario or script references undefined entities, or a structural
/// precondition of an operation does not hold.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace gauth
