#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqcalc/scalar.hpp"

namespace seqcalc {

using Index = std::int64_t;

/// A lazy, memoized map from nonnegative indices to exact scalars, with an
/// optional designated term at index -1. Values are computed on demand and
/// cached; the cache is a pure cache and never changes observable values.
/// Sequences are logically immutable and safe to share between threads.
class Sequence {
public:
    /// Rule receives the index and the already-computed prefix 0..n-1, so
    /// running constructions (prefix sums, recurrences) stay O(1) per term.
    using Rule = std::function<Scalar(Index, const std::vector<Scalar>&)>;

    Sequence() = default;

    static Sequence from_rule(std::function<Scalar(Index)> rule,
                              std::optional<Scalar> pre_term = std::nullopt);
    static Sequence from_step(Rule rule, std::optional<Scalar> pre_term = std::nullopt);
    static Sequence from_terms(std::vector<Scalar> terms,
                               std::optional<Scalar> pre_term = std::nullopt);

    /// n >= 0, or n == -1 when a pre-term is present.
    Scalar term(Index n) const;
    Scalar operator[](Index n) const { return term(n); }

    bool has_pre_term() const;
    Scalar pre_term() const;

    std::vector<Scalar> prefix(Index count) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Shift and insertion.
Sequence shift(const Sequence& s, Index k);
Sequence insert(const Sequence& s, const Scalar& alpha);
Sequence insert_pow(const Sequence& s, const Scalar& alpha, Index times);

// Elementwise algebra.
Sequence operator+(const Sequence& s, const Sequence& t);
Sequence operator-(const Sequence& s, const Sequence& t);
Sequence operator*(const Sequence& s, const Sequence& t);
Sequence operator/(const Sequence& s, const Sequence& t);
Sequence operator-(const Sequence& s);
Sequence operator+(const Sequence& s, const Scalar& alpha);
Sequence operator-(const Sequence& s, const Scalar& alpha);
Sequence operator*(const Scalar& alpha, const Sequence& s);
Sequence inverse(const Sequence& s);
Sequence pow_int(const Sequence& s, Index m);

// Calculus operators.
Sequence diff_right(const Sequence& s);
Sequence diff_left(const Sequence& s);
Sequence int_right(const Sequence& s, const Scalar& alpha);
Sequence int_left(const Sequence& s, const Scalar& alpha);

/// n -> s_{2n}, the right-hand side of the index-doubling theorems.
Sequence double_index(const Sequence& s);

/// Per-index sum of a family of sequences whose terms vanish beyond
/// support_bound(n). One extra term is evaluated to catch a wrong bound.
Sequence series_sum(std::function<Sequence(Index)> family,
                    std::function<Index(Index)> support_bound);

struct PrefixMismatch {
    Index index;
    std::string lhs;
    std::string rhs;
};

struct PrefixComparison {
    bool equal = true;
    std::optional<PrefixMismatch> mismatch;
};

PrefixComparison equal_prefix(const Sequence& s, const Sequence& t, Index count);
/// Comparison modulo m; both sequences must be integer-valued on the prefix.
PrefixComparison equal_prefix_mod(const Sequence& s, const Sequence& t, Index count,
                                  const Int& modulus);

/// Sequence over scalars extended with signed infinities (tangent family).
class ExtSequence {
public:
    ExtSequence() = default;

    static ExtSequence from_rule(std::function<ExtScalar(Index)> rule);
    /// Elementwise num/den with nonzero/zero mapped to the signed infinity
    /// matching the numerator sign.
    static ExtSequence from_ratio(const Sequence& num, const Sequence& den);

    ExtScalar term(Index n) const;
    ExtScalar operator[](Index n) const { return term(n); }

private:
    struct State;
    std::shared_ptr<State> state_;
};

PrefixComparison equal_prefix(const ExtSequence& s, const ExtSequence& t, Index count);

} // namespace seqcalc
