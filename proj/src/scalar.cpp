#include "seqcalc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace seqcalc {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

bool is_perfect_square(const Int& v, Int& root) {
    if (v < 0) return false;
    root = boost::multiprecision::sqrt(v);
    return root * root == v;
}

/// Exact square root of a nonnegative rational, when it exists.
std::optional<Rational> rational_sqrt(const Rational& v) {
    Int num_root, den_root;
    if (!is_perfect_square(numerator(v), num_root)) return std::nullopt;
    if (!is_perfect_square(denominator(v), den_root)) return std::nullopt;
    return Rational(num_root, den_root);
}

int rational_sign(const Rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

} // namespace

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw parse_error("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw parse_error("bad rational '" + s + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) s += "/" + denominator(value).str();
    return s;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw not_real(str());
    return a_.re;
}

Int Scalar::integer_value() const {
    if (!is_integer()) throw not_integral(-1);
    return numerator(a_.re);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    // 1/(a + b*sqrt2) = (a - b*sqrt2)/(a^2 - 2 b^2); the Gaussian divisor is
    // nonzero since sqrt2 is irrational over Q(i).
    Gaussian d = a_ * a_ - Gaussian(Rational(2)) * b_ * b_;
    Gaussian inv_d = d.inverse();
    return {a_ * inv_d, -b_ * inv_d};
}

Scalar Scalar::pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result(1);
    Scalar base = *this;
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (e > 0) {
        if (e & 1ull) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

int Scalar::sign_real() const {
    if (!is_real()) throw not_real(str());
    const Rational& p = a_.re;
    const Rational& q = b_.re;
    int sp = rational_sign(p);
    int sq = rational_sign(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Mixed signs: compare p^2 with 2 q^2 (equality would force p = q = 0).
    return (p * p > 2 * q * q) ? sp : sq;
}

Scalar sqrt_in_field(const Scalar& x) {
    if (!x.is_real()) throw unsupported_radical(x.str() + " is not real");
    if (!x.sqrt2_part().is_zero())
        throw unsupported_radical(x.str() + " is not rational");
    Rational v = x.rational_part().re;
    if (v < 0) throw unsupported_radical(x.str() + " is negative");
    if (auto r = rational_sqrt(v)) return Scalar(*r);
    if (auto r = rational_sqrt(v / 2))
        return Scalar(Gaussian(), Gaussian(*r));
    throw unsupported_radical(x.str() + " is neither s^2 nor 2*s^2");
}

namespace {

/// One additive term of the printed form.
struct PrintedTerm {
    int sign = 1;
    std::string body;
};

std::string gaussian_to_string(const Gaussian& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.re != 0) out = rational_to_string(g.re);
    if (g.im != 0) {
        std::string mag;
        Rational abs_im = g.im < 0 ? Rational(-g.im) : g.im;
        if (abs_im != 1) mag = rational_to_string(abs_im);
        std::string part = mag + "i";
        if (out.empty()) {
            out = (g.im < 0 ? "-" : "") + part;
        } else {
            out += (g.im < 0 ? "-" : "+") + part;
        }
    }
    return out;
}

std::string sqrt2_term_to_string(const Gaussian& b) {
    if (b.im == 0) {
        const Rational& c = b.re;
        if (c == 1) return "sqrt2";
        if (c == -1) return "-sqrt2";
        if (c == Rational(1, 2)) return "1/sqrt2";
        if (c == Rational(-1, 2)) return "-1/sqrt2";
        return rational_to_string(c) + "*sqrt2";
    }
    return "(" + gaussian_to_string(b) + ")*sqrt2";
}

std::vector<PrintedTerm> split_terms(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw parse_error("empty scalar");
    std::vector<PrintedTerm> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        PrintedTerm term;
        if (s[pos] == '+' || s[pos] == '-') {
            term.sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        }
        int depth = 0;
        std::size_t start = pos;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-') && pos > start) break;
            ++pos;
        }
        term.body = s.substr(start, pos - start);
        if (term.body.empty()) throw parse_error("dangling sign in '" + std::string(text) + "'");
        terms.push_back(std::move(term));
    }
    return terms;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (b_.is_zero()) return gaussian_to_string(a_);
    std::string s2 = sqrt2_term_to_string(b_);
    if (a_.is_zero()) return s2;
    std::string head = gaussian_to_string(a_);
    if (!s2.empty() && s2[0] == '-') return head + s2;
    return head + "+" + s2;
}

Scalar Scalar::parse(std::string_view text) {
    Scalar result;
    for (const PrintedTerm& term : split_terms(text)) {
        const std::string& body = term.body;
        Scalar value;
        if (ends_with(body, "sqrt2")) {
            std::string head = body.substr(0, body.size() - 5);
            Gaussian coeff;
            if (head.empty()) {
                coeff = Gaussian(Rational(1));
            } else if (ends_with(head, "/")) {
                // r/sqrt2 == (r/2)*sqrt2
                std::string r = head.substr(0, head.size() - 1);
                coeff = Gaussian(rational_from_string(r) / 2);
            } else if (ends_with(head, "*")) {
                std::string inner = head.substr(0, head.size() - 1);
                if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')')
                    inner = inner.substr(1, inner.size() - 2);
                Scalar c = Scalar::parse(inner);
                if (!c.sqrt2_part().is_zero())
                    throw parse_error("nested sqrt2 in '" + body + "'");
                coeff = c.rational_part();
            } else {
                throw parse_error("bad sqrt2 term '" + body + "'");
            }
            value = Scalar(Gaussian(), coeff);
        } else if (ends_with(body, "i")) {
            std::string head = body.substr(0, body.size() - 1);
            Rational im = head.empty() ? Rational(1) : rational_from_string(head);
            value = Scalar(Gaussian(Rational(0), im));
        } else {
            value = Scalar(rational_from_string(body));
        }
        result += (term.sign < 0) ? -value : value;
    }
    return result;
}

ExtScalar ExtScalar::ratio(const Scalar& num, const Scalar& den) {
    if (!den.is_zero()) return ExtScalar(num / den);
    int s = num.sign_real();
    if (s > 0) return pos_inf();
    if (s < 0) return neg_inf();
    throw division_by_zero();
}

const Scalar& ExtScalar::value() const {
    if (kind_ != Kind::finite) throw error("infinite value has no finite part");
    return value_;
}

std::string ExtScalar::str() const {
    switch (kind_) {
        case Kind::pos_inf: return "inf";
        case Kind::neg_inf: return "-inf";
        default: return value_.str();
    }
}

ExtScalar ExtScalar::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s == "inf" || s == "+inf") return pos_inf();
    if (s == "-inf") return neg_inf();
    return ExtScalar(Scalar::parse(s));
}

} // namespace seqcalc
