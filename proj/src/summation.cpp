#include "seqcalc/summation.hpp"

#include <sstream>

#include "seqcalc/combinatorics.hpp"
#include "seqcalc/errors.hpp"

namespace seqcalc {

namespace {

Rational rational_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

Rational rational_pow(const Rational& base, long e) {
    Rational out = 1;
    Rational b = base;
    long n = e;
    if (n < 0) {
        if (base == 0) throw division_by_zero();
        b = 1 / b;
        n = -n;
    }
    while (n > 0) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

/// Declared bound on |c_{k+1}/c_k| at position k >= 1; decreasing in k, so
/// it also dominates every later ratio. Streams with degree > 0 declare a
/// burn-in of at least 1.
Rational ratio_bound_at(const GrowthBound& g, long k) {
    if (k < 1) k = 1;
    Rational r = g.ratio;
    for (int d = 0; d < g.degree; ++d) r *= Rational(k + 1, k);
    return r;
}

void spot_check_growth(const CoefficientStream& c) {
    for (long k = c.growth.burn_in; k < 64; ++k) {
        Rational ck = c.coeff(k);
        Rational next = c.coeff(k + 1);
        if (ck == 0) {
            if (next != 0)
                throw internal_consistency_error("stream " + c.label +
                                                 " restarts after a zero coefficient");
            continue;
        }
        if (rational_abs(next) > ratio_bound_at(c.growth, k) * rational_abs(ck))
            throw internal_consistency_error("declared growth bound violated by stream " +
                                             c.label + " at k=" + std::to_string(k));
    }
}

} // namespace

CoefficientStream negative_binomial_stream(long n, const Rational& r) {
    if (n < 0) throw error("negative binomial stream needs n >= 0");
    CoefficientStream c;
    c.coeff = [n, r](long k) {
        if (k == 0) return Rational(1);
        return Rational(binomial(n + k - 1, k)) * rational_pow(r, k);
    };
    c.growth.degree = n > 0 ? static_cast<int>(n - 1) : 0;
    c.growth.ratio = rational_abs(r);
    c.growth.burn_in = c.growth.degree > 0 ? 1 : 0;
    c.closed_form = [n, r](const Rational& x) {
        Rational base = 1 - r * x;
        if (base == 0) throw division_by_zero();
        return rational_pow(base, -n);
    };
    std::ostringstream label;
    label << "C(" << n << "+k-1,k)*(" << rational_to_string(r) << ")^k";
    c.label = label.str();
    return c;
}

CoefficientStream power_coefficient_stream(long n) {
    if (n < 0) throw error("power stream needs n >= 0");
    CoefficientStream c;
    c.coeff = [n](long k) {
        if (k == 0) return n == 0 ? Rational(1) : Rational(0); // 0^0 = 1
        return Rational(boost::multiprecision::pow(Int(k), static_cast<unsigned>(n)));
    };
    c.growth.degree = static_cast<int>(n);
    c.growth.ratio = 1;
    c.growth.burn_in = 1;
    c.label = "k^" + std::to_string(n);
    return c;
}

Rational default_epsilon() { return Rational(1, Int(1) << 20); }

namespace {

/// Cheap floating-point dry run of the stopping rule, so a bracket that
/// cannot certify within k_max is rejected before any big-rational work.
long estimate_cutoff(const CoefficientStream& c, const Rational& x, const Rational& eps,
                     long k_max) {
    double xd = x.convert_to<double>();
    double epsd = eps.convert_to<double>();
    double xk = xd;
    for (long k = 0; k <= k_max; ++k) {
        if (k + 1 > c.growth.burn_in) {
            double rho = (ratio_bound_at(c.growth, k + 1) * x).convert_to<double>();
            if (rho < 1) {
                double first_omitted = std::abs(c.coeff(k + 1).convert_to<double>()) * xk;
                // Factor-of-two slack absorbs rounding in this dry run.
                if (first_omitted / (1 - rho) <= epsd / 2) return k;
            }
        }
        xk *= xd;
    }
    return -1;
}

} // namespace

SummationResult tail_bracketed_sum(const CoefficientStream& c, const Rational& x,
                                   const Rational& eps, long k_max) {
    if (!(x > 0 && x < 1)) throw error("tail bracketing needs x in (0,1)");
    if (eps <= 0) throw error("eps must be positive");
    spot_check_growth(c);

    if (estimate_cutoff(c, x, eps, k_max) < 0)
        throw no_convergence_certificate(c.label + " at x=" + rational_to_string(x) +
                                         " within K_max=" + std::to_string(k_max));

    Rational partial = 0;
    Rational xk = 1; // x^k
    for (long k = 0; k <= k_max; ++k) {
        partial += c.coeff(k) * xk;
        xk *= x;
        if (k + 1 <= c.growth.burn_in) continue;
        // For j > k the term ratio is at most rho (the bound is decreasing
        // in k), so the omitted tail is dominated by a geometric series.
        Rational rho = ratio_bound_at(c.growth, k + 1) * x;
        if (rho >= 1) continue;
        Rational first_omitted = rational_abs(c.coeff(k + 1)) * xk;
        Rational tail = first_omitted / (1 - rho);
        if (tail <= eps) {
            SummationResult out;
            out.value = Scalar(partial);
            out.method = SummationMethod::tail_bracketed;
            out.error_bound = tail;
            out.certificate = "K=" + std::to_string(k) + " ratio<=" + rational_to_string(rho) +
                              " tail<=" + rational_to_string(tail);
            return out;
        }
    }
    throw no_convergence_certificate(c.label + " at x=" + rational_to_string(x) +
                                     " within K_max=" + std::to_string(k_max));
}

SummationResult abel_evaluate(const CoefficientStream& c, const Rational& x,
                              const Rational& eps, long k_max) {
    if (!c.closed_form) return tail_bracketed_sum(c, x, eps, k_max);
    Rational exact = c.closed_form(x);
    SummationResult out;
    out.value = Scalar(exact);
    out.method = SummationMethod::abel_schedule;
    out.error_bound = 0;
    // The closed form must agree with the certified bracket wherever the
    // bracket is reachable at moderate cost; this ties the exact route back
    // to the series itself. Near x = 1 only the closed form is usable.
    try {
        long cross_k_max = std::min(k_max, 1024L);
        SummationResult bracket = tail_bracketed_sum(c, x, eps, cross_k_max);
        Rational mid = bracket.value.rational_value();
        if (rational_abs(mid - exact) > bracket.error_bound)
            throw internal_consistency_error("closed form of " + c.label +
                                             " falls outside its own bracket at x=" +
                                             rational_to_string(x));
        out.certificate = "closed form, bracket-checked (" + bracket.certificate + ")";
    } catch (const no_convergence_certificate&) {
        out.certificate = "closed form";
    }
    return out;
}

AbelReport abel_limit_check(const CoefficientStream& c, const Scalar& target,
                            int schedule_max, std::function<Rational(int)> bound) {
    AbelReport report;
    Rational t = target.rational_value();
    for (int m = 1; m <= schedule_max; ++m) {
        Rational x = 1 - Rational(1, Int(1) << m);
        Rational b = bound(m);
        SummationResult s = abel_evaluate(c, x, b / 4);
        Rational gap = s.value.rational_value() - t;
        if (gap < 0) gap = -gap;
        gap += s.error_bound;
        report.points.push_back({m, x, s.value.str(), gap, b});
        if (gap > b) {
            report.pass = false;
            report.failure = "m=" + std::to_string(m) + ": |S - target| <= " +
                             rational_to_string(gap) + " exceeds bound " + rational_to_string(b);
            return report;
        }
    }
    return report;
}

Scalar borel_geometric(const Scalar& r) { return borel_negative_binomial(r, 1); }

Scalar borel_negative_binomial(const Scalar& r, long n) {
    // Convergence region of the regularizing integral: Re(r) < 1.
    Scalar re_part(Gaussian(r.rational_part().re), Gaussian(r.sqrt2_part().re));
    if ((Scalar(1) - re_part).sign_real() <= 0)
        throw outside_borel_region("Re(" + r.str() + ") >= 1");
    return (Scalar(1) - r).pow(-n);
}

FormalPowerSeries FormalPowerSeries::x(std::size_t order) {
    FormalPowerSeries out(order);
    if (order >= 1) out.coeff_[1] = 1;
    return out;
}

FormalPowerSeries FormalPowerSeries::constant(const Rational& c, std::size_t order) {
    FormalPowerSeries out(order);
    out.coeff_[0] = c;
    return out;
}

FormalPowerSeries FormalPowerSeries::geometric(std::size_t order) {
    FormalPowerSeries out(order);
    for (std::size_t n = 0; n <= order; ++n) out.coeff_[n] = 1;
    return out;
}

const Rational& FormalPowerSeries::coefficient(std::size_t n) const {
    if (n >= coeff_.size()) throw error("coefficient index beyond truncation order");
    return coeff_[n];
}

Int FormalPowerSeries::egf_term(std::size_t n) const {
    Rational v = coefficient(n) * Rational(factorial(static_cast<std::int64_t>(n)));
    if (boost::multiprecision::denominator(v) != 1)
        throw not_integral(static_cast<std::int64_t>(n));
    return boost::multiprecision::numerator(v);
}

FormalPowerSeries FormalPowerSeries::operator+(const FormalPowerSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    FormalPowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) out.coeff_[k] = coeff_[k] + other.coeff_[k];
    return out;
}

FormalPowerSeries FormalPowerSeries::operator-(const FormalPowerSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    FormalPowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) out.coeff_[k] = coeff_[k] - other.coeff_[k];
    return out;
}

FormalPowerSeries FormalPowerSeries::operator*(const FormalPowerSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    FormalPowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            out.coeff_[i + j] += coeff_[i] * other.coeff_[j];
    }
    return out;
}

FormalPowerSeries FormalPowerSeries::scaled(const Rational& c) const {
    FormalPowerSeries out(order());
    for (std::size_t k = 0; k <= order(); ++k) out.coeff_[k] = coeff_[k] * c;
    return out;
}

FormalPowerSeries FormalPowerSeries::exp() const {
    if (coeff_[0] != 0) throw error("exp needs zero constant term");
    std::size_t n = order();
    FormalPowerSeries out(n);
    out.coeff_[0] = 1;
    // b' = a' b termwise: n b_n = sum_{k=1..n} k a_k b_{n-k}
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k)
            acc += Rational(static_cast<long>(k)) * coeff_[k] * out.coeff_[m - k];
        out.coeff_[m] = acc / Rational(static_cast<long>(m));
    }
    return out;
}

FormalPowerSeries FormalPowerSeries::compose(const FormalPowerSeries& inner) const {
    if (inner.coeff_[0] != 0) throw error("composition needs zero inner constant term");
    std::size_t n = std::min(order(), inner.order());
    FormalPowerSeries out(n);
    // Horner evaluation from the top coefficient down.
    FormalPowerSeries acc = FormalPowerSeries::constant(coeff_[std::min(order(), n)], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * inner;
        acc.coeff_[0] += coeff_[k];
    }
    return acc;
}

FormalPowerSeries FormalPowerSeries::reciprocal() const {
    if (coeff_[0] == 0) throw error("reciprocal needs nonzero constant term");
    std::size_t n = order();
    FormalPowerSeries out(n);
    out.coeff_[0] = 1 / coeff_[0];
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k) acc += coeff_[k] * out.coeff_[m - k];
        out.coeff_[m] = -acc / coeff_[0];
    }
    return out;
}

} // namespace seqcalc
