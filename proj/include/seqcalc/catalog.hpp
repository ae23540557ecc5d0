#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqcalc/sequence.hpp"

namespace seqcalc {

enum class Variant { left, right };
enum class HypKind { cosh, sinh };
enum class HypVariant { standard, natural };
enum class TrigKind { cos, sin };
enum class TrigVariant { right, left, periodic };
enum class ExpVariant { right, left, natural_neg };

Sequence const_seq(const Scalar& a);
/// 0, 1, 2, ...
Sequence x_seq();
/// n^k with 0^0 = 1.
Sequence power_seq(Index k);

/// The x^k/k! families: k-1 iterated integrals of {n}. The left family is
/// C(n, k), the right family C(n+k-1, k); the closed form is the constructor
/// and the iterated-integral route is kept alongside for cross-checks.
Sequence xk_over_kfact(Index k, Variant variant);
Sequence xk_over_kfact_by_integrals(Index k, Variant variant);

/// right: (1+alpha)^n; left: (1-alpha)^{-n} with the designated term
/// (1-alpha) at index -1; natural_neg: 1, 0, 0, ...
Sequence exp_seq(ExpVariant variant, const Scalar& alpha = Scalar(0));

Sequence hyperbolic_seq(HypKind kind, HypVariant variant);

Sequence trig_seq(TrigKind kind, TrigVariant variant);
ExtSequence tan_seq(Variant variant);

Sequence fibonacci_seq();
Sequence negafibonacci_seq();
/// Seeds 0, 1 and F_{n+2} = P F_{n+1} + Q F_n.
Sequence pq_fibonacci(const Scalar& p, const Scalar& q);
/// k-1 zeros, then 1, then each term the sum of the previous k.
Sequence kbonacci(Index k);

/// Sum over l in 0..k-2 of l insertions of the left integral of s.
Sequence deformed_integral(Index k, const Sequence& s);

/// 2 * fubini(n), the exact value of sum_k k^n 2^-k.
Sequence factorial_dual_seq();
/// Recurrence a_n = 2n a_{n-1} - (n-1)^2 a_{n-2}, each term cross-checked
/// against sum_k k! C(n,k)^2.
Sequence bell_dual_seq();
Sequence bell_dual_via_stirling();
Sequence bell_dual_via_binomials();

/// Parsed form of the textual keys used by the CLI, e.g. `exp:right:alpha=1`,
/// `trig:cos:left`, `fib:pq:P=2,Q=1`, `kbonacci:k=3`, `dual:factorial`.
/// Printing a key and re-parsing it yields the same sequence.
class CatalogKey {
public:
    static CatalogKey parse(const std::string& text);
    std::string str() const;

    bool is_extended() const; // tangent rows carry infinities
    Sequence build() const;
    ExtSequence build_extended() const;

    /// Keys for the documented table of families, in presentation order.
    static std::vector<CatalogKey> table_keys();

private:
    CatalogKey() = default;
    std::string canonical_;
    std::function<Sequence()> builder_;
    std::function<ExtSequence()> ext_builder_;
};

} // namespace seqcalc
