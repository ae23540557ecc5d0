#include "seqcalc/catalog.hpp"

#include <map>
#include <sstream>

#include "seqcalc/combinatorics.hpp"
#include "seqcalc/errors.hpp"

namespace seqcalc {

Sequence const_seq(const Scalar& a) {
    return Sequence::from_rule([a](Index) { return a; });
}

Sequence x_seq() {
    return Sequence::from_rule([](Index n) { return Scalar(Rational(n)); });
}

Sequence power_seq(Index k) {
    if (k < 0) throw error("power_seq exponent must be nonnegative");
    return Sequence::from_rule([k](Index n) {
        if (n == 0) return Scalar(k == 0 ? 1 : 0); // 0^0 = 1
        return Scalar(Rational(boost::multiprecision::pow(Int(n), static_cast<unsigned>(k))));
    });
}

Sequence xk_over_kfact(Index k, Variant variant) {
    if (k < 0) throw error("x^k/k! needs k >= 0");
    if (k == 0) return const_seq(Scalar(1));
    if (k == 1) return x_seq();
    if (variant == Variant::left)
        return Sequence::from_rule([k](Index n) { return Scalar(binomial(n, k)); });
    return Sequence::from_rule([k](Index n) { return Scalar(binomial(n + k - 1, k)); });
}

Sequence xk_over_kfact_by_integrals(Index k, Variant variant) {
    if (k < 0) throw error("x^k/k! needs k >= 0");
    if (k == 0) return const_seq(Scalar(1));
    Sequence s = x_seq();
    for (Index j = 1; j < k; ++j)
        s = (variant == Variant::left) ? int_left(s, Scalar(0)) : int_right(s, Scalar(0));
    return s;
}

Sequence exp_seq(ExpVariant variant, const Scalar& alpha) {
    switch (variant) {
        case ExpVariant::right: {
            Scalar base = Scalar(1) + alpha;
            std::optional<Scalar> pre;
            if (!base.is_zero()) pre = base.inverse();
            return Sequence::from_rule([base](Index n) { return base.pow(n); }, std::move(pre));
        }
        case ExpVariant::left: {
            Scalar base = Scalar(1) - alpha;
            if (base.is_zero())
                throw degenerate_parameter("left exponential with alpha = 1");
            return Sequence::from_rule([base](Index n) { return base.pow(-n); }, base);
        }
        case ExpVariant::natural_neg:
            return Sequence::from_rule([](Index n) { return Scalar(n == 0 ? 1 : 0); });
    }
    throw error("unreachable");
}

Sequence hyperbolic_seq(HypKind kind, HypVariant variant) {
    Sequence pos = exp_seq(ExpVariant::right, Scalar(1));
    Sequence neg = (variant == HypVariant::standard)
                       ? exp_seq(ExpVariant::left, Scalar(-1))
                       : exp_seq(ExpVariant::natural_neg);
    Scalar half(Rational(1, 2));
    return (kind == HypKind::cosh) ? half * (pos + neg) : half * (pos - neg);
}

namespace {

/// Real or imaginary component as a plain sequence, keeping the designated
/// index -1 term when the source has one.
Sequence component_seq(const Sequence& s, bool real_part) {
    std::optional<Scalar> pre;
    if (s.has_pre_term()) {
        Scalar v = s.pre_term();
        pre = Scalar(real_part ? v.rational_part().re : v.rational_part().im);
    }
    return Sequence::from_rule([s, real_part](Index n) {
        Scalar v = s.term(n);
        return Scalar(real_part ? v.rational_part().re : v.rational_part().im);
    }, std::move(pre));
}

Sequence trig_component(TrigKind kind, Variant variant) {
    // cos + i sin is (1+i)^n on the right and (1-i)^{-n} on the left.
    Sequence spiral = (variant == Variant::right) ? exp_seq(ExpVariant::right, Scalar::i())
                                                  : exp_seq(ExpVariant::left, Scalar::i());
    return component_seq(spiral, kind == TrigKind::cos);
}

} // namespace

Sequence trig_seq(TrigKind kind, TrigVariant variant) {
    if (variant == TrigVariant::right) return trig_component(kind, Variant::right);
    if (variant == TrigVariant::left) return trig_component(kind, Variant::left);
    // Periodic form: sign of the right variant times the square root of the
    // product of the two variants; the product is always 0, 1/2, or 1.
    Sequence r = trig_component(kind, Variant::right);
    Sequence l = trig_component(kind, Variant::left);
    return Sequence::from_rule([r, l](Index n) {
        Scalar product = r.term(n) * l.term(n);
        Scalar root = sqrt_in_field(product);
        int sign = r.term(n).sign_real();
        if (sign < 0) return -root;
        if (sign == 0) return Scalar(0);
        return root;
    });
}

ExtSequence tan_seq(Variant variant) {
    TrigVariant tv = (variant == Variant::right) ? TrigVariant::right : TrigVariant::left;
    return ExtSequence::from_ratio(trig_seq(TrigKind::sin, tv), trig_seq(TrigKind::cos, tv));
}

Sequence fibonacci_seq() { return pq_fibonacci(Scalar(1), Scalar(1)); }

Sequence negafibonacci_seq() {
    Sequence fib = fibonacci_seq();
    return Sequence::from_rule([fib](Index n) {
        Scalar v = fib.term(n);
        return (n % 2 == 0) ? -v : v; // times (-1)^{n+1}
    });
}

Sequence pq_fibonacci(const Scalar& p, const Scalar& q) {
    return Sequence::from_step([p, q](Index n, const std::vector<Scalar>& prefix) -> Scalar {
        if (n == 0) return Scalar(0);
        if (n == 1) return Scalar(1);
        return p * prefix[static_cast<std::size_t>(n - 1)] +
               q * prefix[static_cast<std::size_t>(n - 2)];
    });
}

Sequence kbonacci(Index k) {
    if (k < 2) throw error("k-bonacci needs k >= 2");
    return Sequence::from_step([k](Index n, const std::vector<Scalar>& prefix) -> Scalar {
        if (n < k - 1) return Scalar(0);
        if (n == k - 1) return Scalar(1);
        Scalar sum;
        for (Index j = n - k; j < n; ++j) sum += prefix[static_cast<std::size_t>(j)];
        return sum;
    });
}

Sequence deformed_integral(Index k, const Sequence& s) {
    if (k < 2) throw error("deformed integral needs k >= 2");
    Sequence acc = int_left(s, Scalar(0));
    Sequence out = acc;
    for (Index l = 1; l <= k - 2; ++l) {
        acc = insert(acc, Scalar(0));
        out = out + acc;
    }
    return out;
}

Sequence factorial_dual_seq() {
    return Sequence::from_rule([](Index n) { return Scalar(Rational(2) * Rational(fubini(n))); });
}

Sequence bell_dual_seq() {
    return Sequence::from_step([](Index n, const std::vector<Scalar>& prefix) -> Scalar {
        Scalar value;
        if (n == 0) value = Scalar(1);
        else if (n == 1) value = Scalar(2);
        else
            value = Scalar(Rational(2 * n)) * prefix[static_cast<std::size_t>(n - 1)] -
                    Scalar(Rational((n - 1) * (n - 1))) * prefix[static_cast<std::size_t>(n - 2)];
        Int direct = 0;
        for (Index j = 0; j <= n; ++j) {
            Int c = binomial(n, j);
            direct += factorial(j) * c * c;
        }
        if (!(value == Scalar(Rational(direct))))
            throw internal_consistency_error("Bell-dual recurrence disagrees with the "
                                             "binomial sum at n=" + std::to_string(n));
        return value;
    });
}

Sequence bell_dual_via_stirling() {
    return Sequence::from_rule([](Index n) {
        Int sum = 0;
        for (Index j = 0; j <= n; ++j) sum += stirling1_unsigned(n, j) * bell(j + 1);
        return Scalar(Rational(sum));
    });
}

Sequence bell_dual_via_binomials() {
    return Sequence::from_rule([](Index n) {
        Int sum = 0;
        for (Index j = 0; j <= n; ++j) {
            Int c = binomial(n, j);
            sum += factorial(j) * c * c;
        }
        return Scalar(Rational(sum));
    });
}

namespace {

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("expected name=value in '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::vector<std::string> split_key(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    return parts;
}

Index parse_index(const std::string& text) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw parse_error("bad integer '" + text + "'");
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + text + "'");
    }
}

} // namespace

CatalogKey CatalogKey::parse(const std::string& text) {
    auto parts = split_key(text);
    if (parts.empty()) throw parse_error("empty key");
    const std::string& family = parts[0];
    CatalogKey key;

    auto want = [&](std::size_t n) {
        if (parts.size() != n) throw parse_error("malformed key '" + text + "'");
    };

    if (family == "const") {
        want(2);
        auto params = parse_params(parts[1]);
        Scalar a = Scalar::parse(params.at("a"));
        key.canonical_ = "const:a=" + a.str();
        key.builder_ = [a] { return const_seq(a); };
    } else if (family == "x") {
        want(1);
        key.canonical_ = "x";
        key.builder_ = [] { return x_seq(); };
    } else if (family == "power") {
        want(2);
        Index k = parse_index(parse_params(parts[1]).at("k"));
        key.canonical_ = "power:k=" + std::to_string(k);
        key.builder_ = [k] { return power_seq(k); };
    } else if (family == "xkfact") {
        want(3);
        Variant v = parts[1] == "left" ? Variant::left
                  : parts[1] == "right" ? Variant::right
                  : throw parse_error("xkfact variant must be left or right");
        Index k = parse_index(parse_params(parts[2]).at("k"));
        key.canonical_ = "xkfact:" + parts[1] + ":k=" + std::to_string(k);
        key.builder_ = [k, v] { return xk_over_kfact(k, v); };
    } else if (family == "exp") {
        if (parts.size() == 2 && parts[1] == "natural") {
            key.canonical_ = "exp:natural";
            key.builder_ = [] { return exp_seq(ExpVariant::natural_neg); };
        } else {
            want(3);
            ExpVariant v = parts[1] == "right" ? ExpVariant::right
                         : parts[1] == "left" ? ExpVariant::left
                         : throw parse_error("exp variant must be right, left, or natural");
            Scalar alpha = Scalar::parse(parse_params(parts[2]).at("alpha"));
            key.canonical_ = "exp:" + parts[1] + ":alpha=" + alpha.str();
            key.builder_ = [v, alpha] { return exp_seq(v, alpha); };
        }
    } else if (family == "hyp") {
        want(3);
        HypKind kind = parts[1] == "cosh" ? HypKind::cosh
                     : parts[1] == "sinh" ? HypKind::sinh
                     : throw parse_error("hyp kind must be cosh or sinh");
        HypVariant v = parts[2] == "standard" ? HypVariant::standard
                     : parts[2] == "natural" ? HypVariant::natural
                     : throw parse_error("hyp variant must be standard or natural");
        key.canonical_ = "hyp:" + parts[1] + ":" + parts[2];
        key.builder_ = [kind, v] { return hyperbolic_seq(kind, v); };
    } else if (family == "trig") {
        want(3);
        if (parts[1] == "tan") {
            Variant v = parts[2] == "right" ? Variant::right
                      : parts[2] == "left" ? Variant::left
                      : throw parse_error("tan variant must be right or left");
            key.canonical_ = "trig:tan:" + parts[2];
            key.ext_builder_ = [v] { return tan_seq(v); };
        } else {
            TrigKind kind = parts[1] == "cos" ? TrigKind::cos
                          : parts[1] == "sin" ? TrigKind::sin
                          : throw parse_error("trig kind must be cos, sin, or tan");
            TrigVariant v = parts[2] == "right" ? TrigVariant::right
                          : parts[2] == "left" ? TrigVariant::left
                          : parts[2] == "periodic" ? TrigVariant::periodic
                          : throw parse_error("trig variant must be right, left, or periodic");
            key.canonical_ = "trig:" + parts[1] + ":" + parts[2];
            key.builder_ = [kind, v] { return trig_seq(kind, v); };
        }
    } else if (family == "fib") {
        if (parts.size() == 1) {
            key.canonical_ = "fib";
            key.builder_ = [] { return fibonacci_seq(); };
        } else if (parts.size() == 2 && parts[1] == "nega") {
            key.canonical_ = "fib:nega";
            key.builder_ = [] { return negafibonacci_seq(); };
        } else if (parts.size() == 3 && parts[1] == "pq") {
            auto params = parse_params(parts[2]);
            Scalar p = Scalar::parse(params.at("P"));
            Scalar q = Scalar::parse(params.at("Q"));
            key.canonical_ = "fib:pq:P=" + p.str() + ",Q=" + q.str();
            key.builder_ = [p, q] { return pq_fibonacci(p, q); };
        } else {
            throw parse_error("malformed key '" + text + "'");
        }
    } else if (family == "kbonacci") {
        want(2);
        Index k = parse_index(parse_params(parts[1]).at("k"));
        if (k < 2) throw parse_error("kbonacci needs k >= 2");
        key.canonical_ = "kbonacci:k=" + std::to_string(k);
        key.builder_ = [k] { return kbonacci(k); };
    } else if (family == "dual") {
        want(2);
        if (parts[1] == "factorial") {
            key.canonical_ = "dual:factorial";
            key.builder_ = [] { return factorial_dual_seq(); };
        } else if (parts[1] == "bell") {
            key.canonical_ = "dual:bell";
            key.builder_ = [] { return bell_dual_seq(); };
        } else {
            throw parse_error("dual must be factorial or bell");
        }
    } else {
        throw parse_error("unknown family '" + family + "'");
    }
    return key;
}

std::string CatalogKey::str() const { return canonical_; }

bool CatalogKey::is_extended() const { return static_cast<bool>(ext_builder_); }

Sequence CatalogKey::build() const {
    if (!builder_) throw error("key '" + canonical_ + "' builds an extended sequence");
    return builder_();
}

ExtSequence CatalogKey::build_extended() const {
    if (!ext_builder_) throw error("key '" + canonical_ + "' builds a plain sequence");
    return ext_builder_();
}

std::vector<CatalogKey> CatalogKey::table_keys() {
    static const char* keys[] = {
        "const:a=1",
        "power:k=2",
        "exp:right:alpha=1",
        "exp:left:alpha=-1",
        "exp:natural",
        "hyp:cosh:standard",
        "hyp:sinh:standard",
        "hyp:cosh:natural",
        "hyp:sinh:natural",
        "trig:cos:right",
        "trig:sin:right",
        "trig:tan:right",
        "trig:cos:left",
        "trig:sin:left",
        "trig:tan:left",
        "trig:cos:periodic",
        "trig:sin:periodic",
        "dual:factorial",
        "dual:bell",
    };
    std::vector<CatalogKey> out;
    for (const char* k : keys) out.push_back(parse(k));
    return out;
}

} // namespace seqcalc
