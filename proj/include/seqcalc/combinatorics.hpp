#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqcalc/scalar.hpp"

namespace seqcalc {

/// Binomial coefficient C(n, k); 0 outside the triangle.
Int binomial(std::int64_t n, std::int64_t k);

/// Eulerian number A(n, k) for n >= 1, 0 <= k <= n, computed by the standard
/// recurrence and cross-checked row by row against the explicit
/// alternating-sum formula.
Int eulerian(std::int64_t n, std::int64_t k);
Int eulerian_by_formula(std::int64_t n, std::int64_t k);

/// Stirling numbers: second kind S(n, k) and unsigned first kind |s(n, k)|,
/// with S(0,0) = |s(0,0)| = 1 and zero outside the triangle.
Int stirling2(std::int64_t n, std::int64_t k);
Int stirling1_unsigned(std::int64_t n, std::int64_t k);

Int bell(std::int64_t n);
Int factorial(std::int64_t n);
/// Fubini (ordered Bell) number: sum over k of S(n, k) * k!.
Int fubini(std::int64_t n);

bool is_prime(std::int64_t n);

struct ScanReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;
};

/// (p-1)! == -1 mod p exactly for the primes up to p_limit, and for no
/// composite in range.
ScanReport classical_wilson_check(std::int64_t p_limit);

/// B(n+p) == B(n) + B(n+1) mod p for primes p <= p_limit and n <= n_limit.
ScanReport classical_bell_congruence_check(std::int64_t p_limit, std::int64_t n_limit);

} // namespace seqcalc
