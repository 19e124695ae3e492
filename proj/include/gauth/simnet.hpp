#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gauth/group.hpp"
#include "gauth/protocol.hpp"

namespace gauth {

/// Which backend a scenario runs on. kind is one of "mock" (takes q),
/// "curve" (takes p and q), or the shorthands "curve43" / "curve-large".
struct SuiteSpec {
    std::string kind = "mock";
    uint64_t q = 0;
    uint64_t p = 0;

    SuitePtr build() const;
    std::string describe() const;
};

struct GroupSpec {
    std::string id;
    GroupPolicy policy;
    std::vector<std::string> members;
};

/// Picks one future message: the occurrence-th message of the given
/// kind (and, when set, sender/receiver). Must match exactly once per
/// run.
struct TamperSelector {
    std::string kind;
    std::string from; // empty = any sender
    std::string to;   // empty = any receiver
    uint32_t occurrence = 1;
};

/// What the adversary does to the matched message. "flip-byte" XORs one
/// payload byte; "add-point-delta" reencodes the carried point as
/// point + delta*P (public point-bearing messages only); "record"
/// stores a copy for a later attack step; "noop" changes nothing.
struct TamperMutation {
    std::string kind = "noop";
    uint64_t offset = 0; // flip-byte
    uint64_t delta = 0;  // add-point-delta
};

/// One scripted event. Fields are populated per op; `expect`, when
/// nonempty, is checked against the step's actual outcome.
struct ScriptStep {
    std::string op;

    std::string group;                     // authenticate, reinit, derive-key
    std::vector<std::string> participants; // authenticate
    std::string member;                    // handover
    std::string from_group;                // handover
    std::string to_group;                  // handover
    std::string a;                         // derive-key
    std::string b;                         // derive-key
    TamperSelector selector;               // tamper
    TamperMutation mutation;               // tamper
    uint32_t harn_t = 0;                   // harn-round
    uint32_t harn_n = 0;                   // harn-round
    std::vector<uint64_t> harn_participants; // harn-round (x indices)
    uint32_t attack_t = 0;                 // chien-attack, chien-attack-masked
    uint64_t work_bound = uint64_t{1} << 20; // chien-attack-masked

    std::string expect;
};

struct Scenario {
    uint64_t seed = 1;
    SuiteSpec suite;
    std::vector<GroupSpec> groups;
    std::vector<ScriptStep> script;
};

/// Parse + validate a scenario document. Parse errors carry line and
/// column; reference errors name the offending step.
Scenario parse_scenario(const std::string& json_text);

/// Structural validation only (entity references, policy shape, step
/// fields). Throws ValidationError; never executes anything.
void validate_scenario(const Scenario& scenario);

struct RunOptions {
    bool include_secure_plaintext = false;
};

struct ExpectationOutcome {
    size_t step = 0;
    std::string op;
    std::string expected;
    std::string actual;
    bool matched = true;
};

struct RunResult {
    std::string transcript; // newline-delimited JSON, one event per line
    std::vector<ExpectationOutcome> expectations;

    bool all_expectations_met() const {
        for (const ExpectationOutcome& e : expectations)
            if (!e.matched) return false;
        return true;
    }
};

/// Execute the script on a single-threaded deterministic event loop.
/// The transcript is a pure function of (scenario, options). Throws
/// ValidationError if the scenario is invalid or an armed tamper never
/// matched a message.
RunResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

} // namespace gauth
