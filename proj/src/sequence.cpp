#include "seqcalc/sequence.hpp"

#include <mutex>
#include <utility>

namespace seqcalc {

struct Sequence::State {
    Rule rule;
    std::optional<Scalar> pre;
    mutable std::mutex lock;
    mutable std::vector<Scalar> memo;
};

Sequence Sequence::from_rule(std::function<Scalar(Index)> rule,
                             std::optional<Scalar> pre_term) {
    return from_step([rule = std::move(rule)](Index n, const std::vector<Scalar>&) {
        return rule(n);
    }, std::move(pre_term));
}

Sequence Sequence::from_step(Rule rule, std::optional<Scalar> pre_term) {
    Sequence s;
    s.state_ = std::make_shared<State>();
    s.state_->rule = std::move(rule);
    s.state_->pre = std::move(pre_term);
    return s;
}

Sequence Sequence::from_terms(std::vector<Scalar> terms, std::optional<Scalar> pre_term) {
    return from_step([terms = std::move(terms)](Index n, const std::vector<Scalar>&) -> Scalar {
        if (n < static_cast<Index>(terms.size())) return terms[static_cast<std::size_t>(n)];
        throw error("term " + std::to_string(n) + " requested past a finite term list");
    }, std::move(pre_term));
}

Scalar Sequence::term(Index n) const {
    if (!state_) throw error("term of a default-constructed sequence");
    if (n == -1) {
        if (!state_->pre) throw missing_pre_term();
        return *state_->pre;
    }
    if (n < 0) throw error("negative index " + std::to_string(n));
    std::lock_guard guard(state_->lock);
    auto& memo = state_->memo;
    while (static_cast<Index>(memo.size()) <= n) {
        memo.push_back(state_->rule(static_cast<Index>(memo.size()), memo));
    }
    return memo[static_cast<std::size_t>(n)];
}

bool Sequence::has_pre_term() const { return state_ && state_->pre.has_value(); }

Scalar Sequence::pre_term() const {
    if (!has_pre_term()) throw missing_pre_term();
    return *state_->pre;
}

std::vector<Scalar> Sequence::prefix(Index count) const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Index n = 0; n < count; ++n) out.push_back(term(n));
    return out;
}

Sequence shift(const Sequence& s, Index k) {
    if (k < 0) throw error("shift by negative " + std::to_string(k));
    if (k == 0) return s;
    std::optional<Scalar> pre = std::make_optional(s.term(k - 1));
    return Sequence::from_rule([s, k](Index n) { return s.term(n + k); }, std::move(pre));
}

Sequence insert(const Sequence& s, const Scalar& alpha) {
    return Sequence::from_rule([s, alpha](Index n) {
        return n == 0 ? alpha : s.term(n - 1);
    });
}

Sequence insert_pow(const Sequence& s, const Scalar& alpha, Index times) {
    if (times < 0) throw error("insert_pow with negative count");
    Sequence out = s;
    for (Index j = 0; j < times; ++j) out = insert(out, alpha);
    return out;
}

namespace {

std::optional<Scalar> combined_pre(const Sequence& s, const Sequence& t,
                                   Scalar (*op)(const Scalar&, const Scalar&)) {
    if (s.has_pre_term() && t.has_pre_term()) return op(s.pre_term(), t.pre_term());
    return std::nullopt;
}

} // namespace

Sequence operator+(const Sequence& s, const Sequence& t) {
    return Sequence::from_rule([s, t](Index n) { return s.term(n) + t.term(n); },
                               combined_pre(s, t, +[](const Scalar& a, const Scalar& b) { return a + b; }));
}

Sequence operator-(const Sequence& s, const Sequence& t) {
    return Sequence::from_rule([s, t](Index n) { return s.term(n) - t.term(n); },
                               combined_pre(s, t, +[](const Scalar& a, const Scalar& b) { return a - b; }));
}

Sequence operator*(const Sequence& s, const Sequence& t) {
    return Sequence::from_rule([s, t](Index n) { return s.term(n) * t.term(n); },
                               combined_pre(s, t, +[](const Scalar& a, const Scalar& b) { return a * b; }));
}

Sequence operator/(const Sequence& s, const Sequence& t) {
    std::optional<Scalar> pre;
    if (s.has_pre_term() && t.has_pre_term() && !t.pre_term().is_zero())
        pre = s.pre_term() / t.pre_term();
    return Sequence::from_rule([s, t](Index n) {
        Scalar d = t.term(n);
        if (d.is_zero()) throw division_by_zero(n);
        return s.term(n) / d;
    }, std::move(pre));
}

Sequence operator-(const Sequence& s) {
    std::optional<Scalar> pre;
    if (s.has_pre_term()) pre = -s.pre_term();
    return Sequence::from_rule([s](Index n) { return -s.term(n); }, std::move(pre));
}

Sequence operator+(const Sequence& s, const Scalar& alpha) {
    std::optional<Scalar> pre;
    if (s.has_pre_term()) pre = s.pre_term() + alpha;
    return Sequence::from_rule([s, alpha](Index n) { return s.term(n) + alpha; }, std::move(pre));
}

Sequence operator-(const Sequence& s, const Scalar& alpha) { return s + (-alpha); }

Sequence operator*(const Scalar& alpha, const Sequence& s) {
    std::optional<Scalar> pre;
    if (s.has_pre_term()) pre = alpha * s.pre_term();
    return Sequence::from_rule([s, alpha](Index n) { return alpha * s.term(n); }, std::move(pre));
}

Sequence inverse(const Sequence& s) {
    std::optional<Scalar> pre;
    if (s.has_pre_term() && !s.pre_term().is_zero()) pre = s.pre_term().inverse();
    return Sequence::from_rule([s](Index n) {
        Scalar v = s.term(n);
        if (v.is_zero()) throw division_by_zero(n);
        return v.inverse();
    }, std::move(pre));
}

Sequence pow_int(const Sequence& s, Index m) {
    if (m < 0) throw error("pow_int with negative exponent");
    std::optional<Scalar> pre;
    if (s.has_pre_term()) pre = s.pre_term().pow(m);
    return Sequence::from_rule([s, m](Index n) { return s.term(n).pow(m); }, std::move(pre));
}

Sequence diff_right(const Sequence& s) {
    std::optional<Scalar> pre;
    if (s.has_pre_term()) pre = s.term(0) - s.pre_term();
    return Sequence::from_rule([s](Index n) { return s.term(n + 1) - s.term(n); },
                               std::move(pre));
}

Sequence diff_left(const Sequence& s) {
    if (!s.has_pre_term()) throw missing_pre_term();
    return Sequence::from_rule([s](Index n) { return s.term(n) - s.term(n - 1); });
}

Sequence int_right(const Sequence& s, const Scalar& alpha) {
    return Sequence::from_step([s, alpha](Index n, const std::vector<Scalar>& prefix) {
        if (n == 0) return alpha + s.term(0);
        return prefix[static_cast<std::size_t>(n - 1)] + s.term(n);
    }, alpha);
}

Sequence int_left(const Sequence& s, const Scalar& alpha) {
    return Sequence::from_step([s, alpha](Index n, const std::vector<Scalar>& prefix) {
        if (n == 0) return alpha;
        return prefix[static_cast<std::size_t>(n - 1)] + s.term(n - 1);
    }, alpha);
}

Sequence double_index(const Sequence& s) {
    return Sequence::from_rule([s](Index n) { return s.term(2 * n); });
}

Sequence series_sum(std::function<Sequence(Index)> family,
                    std::function<Index(Index)> support_bound) {
    struct Cache {
        std::mutex lock;
        std::vector<Sequence> built;
    };
    auto cache = std::make_shared<Cache>();
    auto member = [family = std::move(family), cache](Index k) {
        std::lock_guard guard(cache->lock);
        while (static_cast<Index>(cache->built.size()) <= k)
            cache->built.push_back(family(static_cast<Index>(cache->built.size())));
        return cache->built[static_cast<std::size_t>(k)];
    };
    auto bound = std::move(support_bound);
    return Sequence::from_rule([member, bound](Index n) {
        Index k_max = bound(n);
        Scalar sum;
        for (Index k = 0; k <= k_max; ++k) sum += member(k).term(n);
        if (!member(k_max + 1).term(n).is_zero()) throw bad_support_bound(n, k_max + 1);
        return sum;
    });
}

PrefixComparison equal_prefix(const Sequence& s, const Sequence& t, Index count) {
    for (Index n = 0; n < count; ++n) {
        Scalar a = s.term(n);
        Scalar b = t.term(n);
        if (!(a == b)) return {false, PrefixMismatch{n, a.str(), b.str()}};
    }
    return {};
}

PrefixComparison equal_prefix_mod(const Sequence& s, const Sequence& t, Index count,
                                  const Int& modulus) {
    if (modulus < 1) throw error("modulus must be >= 1");
    auto reduce = [&](const Scalar& v, Index n) {
        if (!v.is_integer()) throw not_integral(n);
        Int r = v.integer_value() % modulus;
        if (r < 0) r += modulus;
        return r;
    };
    for (Index n = 0; n < count; ++n) {
        Int a = reduce(s.term(n), n);
        Int b = reduce(t.term(n), n);
        if (a != b) return {false, PrefixMismatch{n, a.str(), b.str()}};
    }
    return {};
}

struct ExtSequence::State {
    std::function<ExtScalar(Index)> rule;
    mutable std::mutex lock;
    mutable std::vector<ExtScalar> memo;
};

ExtSequence ExtSequence::from_rule(std::function<ExtScalar(Index)> rule) {
    ExtSequence s;
    s.state_ = std::make_shared<State>();
    s.state_->rule = std::move(rule);
    return s;
}

ExtSequence ExtSequence::from_ratio(const Sequence& num, const Sequence& den) {
    return from_rule([num, den](Index n) { return ExtScalar::ratio(num.term(n), den.term(n)); });
}

ExtScalar ExtSequence::term(Index n) const {
    if (!state_) throw error("term of a default-constructed sequence");
    if (n < 0) throw error("negative index " + std::to_string(n));
    std::lock_guard guard(state_->lock);
    auto& memo = state_->memo;
    while (static_cast<Index>(memo.size()) <= n)
        memo.push_back(state_->rule(static_cast<Index>(memo.size())));
    return memo[static_cast<std::size_t>(n)];
}

PrefixComparison equal_prefix(const ExtSequence& s, const ExtSequence& t, Index count) {
    for (Index n = 0; n < count; ++n) {
        ExtScalar a = s.term(n);
        ExtScalar b = t.term(n);
        if (!(a == b)) return {false, PrefixMismatch{n, a.str(), b.str()}};
    }
    return {};
}

} // namespace seqcalc
