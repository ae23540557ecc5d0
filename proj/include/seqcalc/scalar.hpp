#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "seqcalc/errors.hpp"

namespace seqcalc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational rational_from_string(std::string_view text);
std::string rational_to_string(const Rational& value);

/// Gaussian rational p + q*i with exact components.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend Gaussian operator+(const Gaussian& x, const Gaussian& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend Gaussian operator-(const Gaussian& x, const Gaussian& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }
    friend Gaussian operator*(const Gaussian& x, const Gaussian& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const Gaussian& x, const Gaussian& y) {
        return x.re == y.re && x.im == y.im;
    }

    Gaussian inverse() const {
        if (is_zero()) throw division_by_zero();
        Rational n = norm();
        return {re / n, -im / n};
    }
    friend Gaussian operator/(const Gaussian& x, const Gaussian& y) {
        return x * y.inverse();
    }
};

/// Exact element of the field Q(i, sqrt2), stored as a + b*sqrt2 with
/// Gaussian-rational components a and b. The representation is unique
/// because 1 and sqrt2 are linearly independent over Q(i).
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : a_(Rational(v)) {}
    Scalar(long long v) : a_(Rational(v)) {}
    Scalar(const Int& v) : a_(Rational(v)) {}
    Scalar(Rational v) : a_(std::move(v)) {}
    Scalar(Gaussian a) : a_(std::move(a)) {}
    Scalar(Gaussian a, Gaussian b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar i() { return Scalar(Gaussian(Rational(0), Rational(1))); }
    static Scalar sqrt2() { return Scalar(Gaussian(), Gaussian(Rational(1))); }

    const Gaussian& rational_part() const { return a_; }
    const Gaussian& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_real() const { return a_.im == 0 && b_.im == 0; }
    bool is_rational() const { return a_.is_real() && b_.is_zero(); }
    bool is_integer() const {
        return is_rational() && boost::multiprecision::denominator(a_.re) == 1;
    }

    Rational rational_value() const;
    Int integer_value() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend Scalar operator-(const Scalar& x) { return {-x.a_, -x.b_}; }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        return {x.a_ * y.a_ + Gaussian(Rational(2)) * x.b_ * y.b_,
                x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        return x * y.inverse();
    }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    Scalar& operator+=(const Scalar& x) { return *this = *this + x; }
    Scalar& operator-=(const Scalar& x) { return *this = *this - x; }
    Scalar& operator*=(const Scalar& x) { return *this = *this * x; }
    Scalar& operator/=(const Scalar& x) { return *this = *this / x; }

    Scalar inverse() const;
    Scalar pow(long long exponent) const;

    /// Exact sign of a real scalar p + q*sqrt2, decided by comparing
    /// p^2 against 2 q^2. Throws not_real for values with an imaginary part.
    int sign_real() const;

    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    Gaussian a_; // rational-part coefficient of 1
    Gaussian b_; // coefficient of sqrt2
};

/// Square root within the field, restricted to nonnegative rationals of the
/// shape s^2 (giving |s|) or 2 s^2 (giving |s|*sqrt2).
Scalar sqrt_in_field(const Scalar& x);

/// A scalar extended with the two signed infinities used by the tangent
/// sequences. Infinities only arise from nonzero/zero division.
class ExtScalar {
public:
    enum class Kind { finite, pos_inf, neg_inf };

    ExtScalar() : kind_(Kind::finite) {}
    ExtScalar(Scalar v) : kind_(Kind::finite), value_(std::move(v)) {}

    static ExtScalar pos_inf() { return ExtScalar(Kind::pos_inf); }
    static ExtScalar neg_inf() { return ExtScalar(Kind::neg_inf); }

    /// num/den with the convention n/0 = +inf and -n/0 = -inf for real n != 0.
    static ExtScalar ratio(const Scalar& num, const Scalar& den);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Scalar& value() const;

    friend bool operator==(const ExtScalar& x, const ExtScalar& y) {
        if (x.kind_ != y.kind_) return false;
        if (x.kind_ != Kind::finite) return true;
        return x.value_ == y.value_;
    }

    std::string str() const;
    static ExtScalar parse(std::string_view text);

private:
    explicit ExtScalar(Kind k) : kind_(k) {}
    Kind kind_;
    Scalar value_;
};

} // namespace seqcalc
