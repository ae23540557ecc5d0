#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqcalc/scalar.hpp"

namespace seqcalc {

/// Declared growth of a coefficient stream: |c_{k+1}/c_k| is bounded by
/// ratio * ((k+2)/(k+1))^degree for k >= burn_in. degree = 0 is plain
/// geometric growth; degree = d covers k^d and binomial C(n+k-1, k) shapes.
struct GrowthBound {
    int degree = 0;
    Rational ratio = 1;
    long burn_in = 0;
};

/// A real-rational coefficient stream c_0, c_1, ... with a declared growth
/// bound (spot-checked on the first 64 coefficients) and, when the stream is
/// of geometric type, an exact closed form for sum_k c_k x^k.
struct CoefficientStream {
    std::function<Rational(long)> coeff;
    GrowthBound growth;
    std::function<Rational(const Rational&)> closed_form; // optional
    std::string label;
};

/// Stream c_k = C(n+k-1, k) r^k with closed form (1 - r x)^{-n}; n = 1 is the
/// geometric series. Grandi's series is n = 1, r = -1.
CoefficientStream negative_binomial_stream(long n, const Rational& r);

/// Stream c_k = k^n, the integrand of the factorial-dual sums.
CoefficientStream power_coefficient_stream(long n);

enum class SummationMethod { exact_finite, tail_bracketed, abel_schedule, borel_closed_form };

struct SummationResult {
    Scalar value;
    SummationMethod method = SummationMethod::exact_finite;
    Rational error_bound = 0;     // half-width of the verified bracket
    std::string certificate;
};

inline constexpr long kDefaultKMax = 4096;
Rational default_epsilon(); // 2^-20

/// Partial sum of sum_k c_k x^k with a certified geometric tail bound <= eps:
/// the returned value is the midpoint of the bracket [S_K - t, S_K + t] where
/// t = |first omitted term| / (1 - ratio) once the term ratio is provably
/// below 1. Throws no_convergence_certificate if K_max is hit first.
SummationResult tail_bracketed_sum(const CoefficientStream& c, const Rational& x,
                                   const Rational& eps, long k_max = kDefaultKMax);

/// Value of sum_k c_k x^k for x in (0,1): the exact closed form when the
/// stream declares one (cross-validated against a certified bracket whenever
/// the bracket is reachable within K_max), otherwise the bracketed value.
SummationResult abel_evaluate(const CoefficientStream& c, const Rational& x,
                              const Rational& eps, long k_max = kDefaultKMax);

struct AbelPoint {
    int m;
    Rational x;          // 1 - 2^-m
    std::string value;
    Rational gap;        // |S(x) - target| (plus bracket width when bracketed)
    Rational bound;
};

struct AbelReport {
    bool pass = true;
    std::vector<AbelPoint> points;
    std::string failure;
};

/// Checks |S(x_m) - target| <= bound(m) along the schedule x_m = 1 - 2^-m.
AbelReport abel_limit_check(const CoefficientStream& c, const Scalar& target,
                            int schedule_max, std::function<Rational(int)> bound);

/// Closed-form value 1/(1-r) assigned to sum_k r^k; requires Re(r) < 1.
Scalar borel_geometric(const Scalar& r);

/// Closed-form value (1-r)^{-n} assigned to sum_k C(n+k-1,k) r^k under the
/// same region constraint.
Scalar borel_negative_binomial(const Scalar& r, long n);

/// Dense truncated power series with exact rational coefficients.
class FormalPowerSeries {
public:
    explicit FormalPowerSeries(std::size_t order) : coeff_(order + 1, Rational(0)) {}
    FormalPowerSeries(std::vector<Rational> coeff) : coeff_(std::move(coeff)) {
        if (coeff_.empty()) coeff_.push_back(0);
    }

    static FormalPowerSeries x(std::size_t order);
    static FormalPowerSeries constant(const Rational& c, std::size_t order);
    /// 1/(1-x) truncated.
    static FormalPowerSeries geometric(std::size_t order);

    std::size_t order() const { return coeff_.size() - 1; }
    const Rational& coefficient(std::size_t n) const;
    /// n! * c_n, the value an exponential generating function encodes at n.
    Int egf_term(std::size_t n) const;

    FormalPowerSeries operator+(const FormalPowerSeries& other) const;
    FormalPowerSeries operator-(const FormalPowerSeries& other) const;
    FormalPowerSeries operator*(const FormalPowerSeries& other) const;
    FormalPowerSeries scaled(const Rational& c) const;

    /// exp of a series with zero constant term.
    FormalPowerSeries exp() const;
    /// this(inner) where inner has zero constant term.
    FormalPowerSeries compose(const FormalPowerSeries& inner) const;
    /// 1/this; requires nonzero constant term.
    FormalPowerSeries reciprocal() const;

private:
    std::vector<Rational> coeff_;
};

} // namespace seqcalc
