#include "seqcalc/combinatorics.hpp"

#include <mutex>

#include "seqcalc/errors.hpp"

namespace seqcalc {

namespace {

using Row = std::vector<Int>;

/// Triangular tables grow append-only; rows are immutable once computed.
struct Tables {
    std::mutex lock;
    std::vector<Row> pascal;
    std::vector<Row> euler;
    std::vector<Row> s2;
    std::vector<Row> s1;
    std::vector<Int> bell_numbers;
    std::vector<Int> factorials;
    std::vector<Int> fubini_numbers;
};

Tables& tables() {
    static Tables t;
    return t;
}

void grow_pascal(Tables& t, std::int64_t n) {
    while (static_cast<std::int64_t>(t.pascal.size()) <= n) {
        std::size_t m = t.pascal.size();
        Row row(m + 1, 1);
        for (std::size_t k = 1; k < m; ++k)
            row[k] = t.pascal[m - 1][k - 1] + t.pascal[m - 1][k];
        t.pascal.push_back(std::move(row));
    }
}

Int eulerian_formula_locked(Tables& t, std::int64_t n, std::int64_t k) {
    grow_pascal(t, n + 1);
    Int sum = 0;
    for (std::int64_t l = 0; l <= k + 1; ++l) {
        Int base = k + 1 - l;
        if (base == 0) continue;
        Int term = t.pascal[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(l)] *
                   boost::multiprecision::pow(base, static_cast<unsigned>(n));
        sum += (l % 2 == 0) ? term : -term;
    }
    return sum;
}

void grow_euler(Tables& t, std::int64_t n) {
    if (t.euler.empty()) t.euler.push_back({Int(1)}); // A(0, 0) = 1
    while (static_cast<std::int64_t>(t.euler.size()) <= n) {
        std::size_t m = t.euler.size();
        const Row& above = t.euler[m - 1];
        Row row(m + 1, 0);
        for (std::size_t k = 0; k <= m; ++k) {
            Int up = (k < above.size()) ? above[k] : Int(0);
            Int up_left = (k >= 1 && k - 1 < above.size()) ? above[k - 1] : Int(0);
            row[k] = Int(k + 1) * up + Int(m - k) * up_left;
        }
        for (std::size_t k = 0; k <= m; ++k) {
            if (row[k] != eulerian_formula_locked(t, static_cast<std::int64_t>(m),
                                                  static_cast<std::int64_t>(k)))
                throw internal_consistency_error(
                    "Eulerian recurrence and explicit formula disagree at (" +
                    std::to_string(m) + ", " + std::to_string(k) + ")");
        }
        t.euler.push_back(std::move(row));
    }
}

void grow_s2(Tables& t, std::int64_t n) {
    if (t.s2.empty()) t.s2.push_back({Int(1)});
    while (static_cast<std::int64_t>(t.s2.size()) <= n) {
        std::size_t m = t.s2.size();
        const Row& above = t.s2[m - 1];
        Row row(m + 1, 0);
        for (std::size_t k = 1; k <= m; ++k) {
            Int up = (k < above.size()) ? above[k] : Int(0);
            row[k] = Int(k) * up + above[k - 1];
        }
        t.s2.push_back(std::move(row));
    }
}

void grow_s1(Tables& t, std::int64_t n) {
    if (t.s1.empty()) t.s1.push_back({Int(1)});
    while (static_cast<std::int64_t>(t.s1.size()) <= n) {
        std::size_t m = t.s1.size();
        const Row& above = t.s1[m - 1];
        Row row(m + 1, 0);
        for (std::size_t k = 1; k <= m; ++k) {
            Int up = (k < above.size()) ? above[k] : Int(0);
            row[k] = Int(m - 1) * up + above[k - 1];
        }
        t.s1.push_back(std::move(row));
    }
}

void grow_factorials(Tables& t, std::int64_t n) {
    if (t.factorials.empty()) t.factorials.push_back(1);
    while (static_cast<std::int64_t>(t.factorials.size()) <= n) {
        std::size_t m = t.factorials.size();
        Int next = t.factorials[m - 1] * Int(m);
        grow_s1(t, static_cast<std::int64_t>(m));
        Int row_sum = 0;
        for (const Int& v : t.s1[m]) row_sum += v;
        if (row_sum != next)
            throw internal_consistency_error("factorial vs Stirling-1 row sum at " +
                                             std::to_string(m));
        t.factorials.push_back(std::move(next));
    }
}

void grow_bell(Tables& t, std::int64_t n) {
    while (static_cast<std::int64_t>(t.bell_numbers.size()) <= n) {
        std::size_t m = t.bell_numbers.size();
        grow_s2(t, static_cast<std::int64_t>(m));
        Int row_sum = 0;
        for (const Int& v : t.s2[m]) row_sum += v;
        if (m >= 1) {
            // cross-check against B(m) = sum_k C(m-1, k) B(k)
            grow_pascal(t, static_cast<std::int64_t>(m - 1));
            Int rec = 0;
            for (std::size_t k = 0; k < m; ++k)
                rec += t.pascal[m - 1][k] * t.bell_numbers[k];
            if (rec != row_sum)
                throw internal_consistency_error("Bell recurrence vs Stirling-2 row sum at " +
                                                 std::to_string(m));
        }
        t.bell_numbers.push_back(std::move(row_sum));
    }
}

void grow_fubini(Tables& t, std::int64_t n) {
    while (static_cast<std::int64_t>(t.fubini_numbers.size()) <= n) {
        std::size_t m = t.fubini_numbers.size();
        grow_s2(t, static_cast<std::int64_t>(m));
        grow_factorials(t, static_cast<std::int64_t>(m));
        Int sum = 0;
        for (std::size_t k = 0; k < t.s2[m].size(); ++k)
            sum += t.s2[m][k] * t.factorials[k];
        t.fubini_numbers.push_back(std::move(sum));
    }
}

void check_range(std::int64_t n, const char* what) {
    if (n < 0) throw error(std::string(what) + " index must be nonnegative");
}

} // namespace

Int binomial(std::int64_t n, std::int64_t k) {
    check_range(n, "binomial");
    if (k < 0 || k > n) return 0;
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_pascal(t, n);
    return t.pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int eulerian(std::int64_t n, std::int64_t k) {
    if (n < 1) throw error("Eulerian numbers need n >= 1");
    if (k < 0 || k > n) throw error("Eulerian index k out of range");
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_euler(t, n);
    return t.euler[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int eulerian_by_formula(std::int64_t n, std::int64_t k) {
    if (n < 1) throw error("Eulerian numbers need n >= 1");
    if (k < 0 || k > n) throw error("Eulerian index k out of range");
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    return eulerian_formula_locked(t, n, k);
}

Int stirling2(std::int64_t n, std::int64_t k) {
    check_range(n, "stirling2");
    if (k < 0 || k > n) return 0;
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_s2(t, n);
    return t.s2[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int stirling1_unsigned(std::int64_t n, std::int64_t k) {
    check_range(n, "stirling1");
    if (k < 0 || k > n) return 0;
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_s1(t, n);
    return t.s1[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int bell(std::int64_t n) {
    check_range(n, "bell");
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_bell(t, n);
    return t.bell_numbers[static_cast<std::size_t>(n)];
}

Int factorial(std::int64_t n) {
    check_range(n, "factorial");
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_factorials(t, n);
    return t.factorials[static_cast<std::size_t>(n)];
}

Int fubini(std::int64_t n) {
    check_range(n, "fubini");
    Tables& t = tables();
    std::lock_guard guard(t.lock);
    grow_fubini(t, n);
    return t.fubini_numbers[static_cast<std::size_t>(n)];
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ScanReport classical_wilson_check(std::int64_t p_limit) {
    ScanReport report;
    for (std::int64_t p = 2; p <= p_limit; ++p) {
        Int r = factorial(p - 1) % p;
        bool wilson_holds = (r == p - 1);
        ++report.checked;
        if (wilson_holds != is_prime(p)) {
            report.pass = false;
            report.failures.push_back("p=" + std::to_string(p) + ": (p-1)! mod p = " + r.str());
        }
    }
    return report;
}

ScanReport classical_bell_congruence_check(std::int64_t p_limit, std::int64_t n_limit) {
    ScanReport report;
    for (std::int64_t p = 2; p <= p_limit; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t n = 0; n <= n_limit; ++n) {
            Int lhs = bell(n + p) % p;
            Int rhs = (bell(n) + bell(n + 1)) % p;
            ++report.checked;
            if (lhs != rhs) {
                report.pass = false;
                report.failures.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n));
            }
        }
    }
    return report;
}

} // namespace seqcalc
