#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqcalc/sequence.hpp"

namespace seqcalc {

struct VerifyOptions {
    Index prefix = 64; // prefix length for exact checks
    bool parallel = true;
};

struct RunOutcome {
    bool pass = true;
    std::optional<PrefixMismatch> mismatch;
    long scanned = 0;
    std::string note;
};

/// A named executable check: a pair of sequence expressions plus a
/// verification mode, or a bespoke scan. Entries flagged as documented
/// discrepancies assert a recorded mismatch instead of equality and never
/// fail a verification run.
struct IdentitySpec {
    std::string key;
    std::string description;
    std::string mode; // exact-prefix | modular | bracket | abel | borel | scan | tolerance | limit-family
    std::map<std::string, std::string> params;
    bool documented_discrepancy = false;
    std::function<RunOutcome(const VerifyOptions&)> run;
};

struct VerificationReport {
    std::string key;
    std::string status; // pass | fail | documented-discrepancy
    std::string mode;
    std::map<std::string, std::string> params;
    std::optional<PrefixMismatch> first_mismatch;
    long scanned = 0;
    double elapsed_ms = 0;
    std::string note;

    bool counts_as_pass() const { return status != "fail"; }
};

const std::vector<IdentitySpec>& registry();
std::vector<std::string> identity_keys();

VerificationReport verify(const std::string& key, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {});

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Divisibility scan of the factorial dual: a_n == 0 mod n+1 whenever n+1 is
/// prime; even n never satisfy it; odd composite exceptions are recorded.
RunOutcome wilson_dual_scan(Index limit);
/// k! S(p-1, k) == -(-1)^k mod p for 1 <= k <= p-1, and the terms sum to 0.
RunOutcome wilson_lemma(std::int64_t p);
/// Bell-dual congruences a_{n+m} == a_n mod m for n+m <= limit, plus the two
/// base congruences a_m == 1 and a_{m+1} == 2 mod m.
RunOutcome belldual_modular_scan(Index limit);

} // namespace seqcalc
