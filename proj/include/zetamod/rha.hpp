#pragma once

// Riemann Hypothesis Analogue for polynomial zeta-quotients: numeric root
// magnitudes fenced in by exact necessary conditions (functional equation,
// power-sum bounds), the fixed-point bound criterion, restriction
// equivalence, and empirical order-of-covering estimates.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "exactcore.hpp"
#include "spectrum.hpp"
#include "zetafn.hpp"

namespace zetamod {

enum class Verdict { Holds, Fails, Inconclusive };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace detail {

using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>,
                                                boost::multiprecision::et_off>;

struct HighComplex {
    HighFloat re = 0;
    HighFloat im = 0;

    friend HighComplex operator+(const HighComplex& a, const HighComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend HighComplex operator-(const HighComplex& a, const HighComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend HighComplex operator*(const HighComplex& a, const HighComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend HighComplex operator/(const HighComplex& a, const HighComplex& b)
    {
        const HighFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    HighFloat abs() const { return sqrt(re * re + im * im); }
};

inline HighFloat to_high(const BigInt& x) { return HighFloat(x.str()); }
inline HighFloat to_high(const Rational& x)
{
    return to_high(boost::multiprecision::numerator(x)) / to_high(boost::multiprecision::denominator(x));
}

// Rational polynomials, low degree first, used only for square-free splitting.
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p)
{
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

inline bool is_constant(const RatPoly& p) { return p.size() <= 1; }

inline RatPoly make_monic(RatPoly p)
{
    trim(p);
    const Rational lead = p.back();
    if (lead != 0)
        for (auto& c : p)
            c /= lead;
    return p;
}

inline RatPoly derivative(const RatPoly& p)
{
    if (p.size() <= 1)
        return {Rational(0)};
    RatPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d[i - 1] = p[i] * static_cast<long long>(i);
    trim(d);
    return d;
}

inline RatPoly sub(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db)
        return {{Rational(0)}, a};
    RatPoly quot(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        const Rational c = a[i] / b[db];
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    a.resize(std::max<std::size_t>(1, db));
    trim(a);
    trim(quot);
    return {quot, a};
}

inline bool is_zero(const RatPoly& p) { return p.size() == 1 && p[0] == 0; }

inline RatPoly gcd(RatPoly a, RatPoly b)
{
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Yun's square-free decomposition of a monic polynomial: f = prod g_i^i.
inline std::vector<std::pair<RatPoly, std::size_t>> squarefree_factors(const RatPoly& f)
{
    std::vector<std::pair<RatPoly, std::size_t>> out;
    RatPoly fp = derivative(f);
    RatPoly a = gcd(f, fp);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(fp, a).first;
    RatPoly d = sub(c, derivative(b));
    std::size_t i = 1;
    while (!is_constant(b)) {
        a = gcd(b, d);
        if (!is_constant(a))
            out.emplace_back(a, i);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

struct RootResult {
    std::vector<HighComplex> roots;
    bool converged = true;
};

/// Aberth-Ehrlich simultaneous iteration for a monic square-free polynomial.
/// Initial guesses lie on the circle of radius |f(0)|^{1/n} at fixed offsets.
inline RootResult aberth_roots(const RatPoly& monic)
{
    RootResult result;
    const std::size_t n = monic.size() - 1;
    if (n == 0)
        return result;
    std::vector<HighFloat> c(monic.size());
    for (std::size_t i = 0; i < monic.size(); ++i)
        c[i] = to_high(monic[i]);
    if (n == 1) {
        result.roots.push_back({-c[0], 0});
        return result;
    }

    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    HighFloat radius = c[0] == 0 ? HighFloat(1) : HighFloat(exp(log(abs(c[0])) / n));
    std::vector<HighComplex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const HighFloat angle = 2 * pi * k / n + HighFloat("0.7");
        const HighFloat rk = radius * (1 + HighFloat(k + 1) / (100 * n));
        z[k] = {rk * cos(angle), rk * sin(angle)};
    }

    auto eval = [&](const HighComplex& x, HighComplex& value, HighComplex& deriv, HighFloat& scale) {
        value = {c[n], 0};
        deriv = {0, 0};
        scale = abs(c[n]);
        const HighFloat ax = x.abs();
        for (std::size_t i = n; i-- > 0;) {
            deriv = deriv * x + value;
            value = value * x + HighComplex{c[i], 0};
            scale = scale * ax + abs(c[i]);
        }
    };

    const HighFloat threshold("1e-30");
    constexpr int kMaxIterations = 2000;
    bool done = false;
    for (int iter = 0; iter < kMaxIterations && !done; ++iter) {
        done = true;
        for (std::size_t k = 0; k < n; ++k) {
            HighComplex value, deriv;
            HighFloat scale;
            eval(z[k], value, deriv, scale);
            if (value.abs() <= threshold * scale)
                continue;
            done = false;
            const HighComplex ratio = value / deriv;
            HighComplex repulsion{0, 0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k)
                    repulsion = repulsion + HighComplex{1, 0} / (z[k] - z[j]);
            const HighComplex step = ratio / (HighComplex{1, 0} - ratio * repulsion);
            z[k] = z[k] - step;
        }
    }
    result.converged = done;
    result.roots = std::move(z);
    return result;
}

} // namespace detail

/// Inverse roots omega_j of p (with multiplicity), i.e. the roots of t^d p(1/t).
struct InverseRoots {
    std::vector<std::complex<double>> values;
    std::vector<detail::HighFloat> magnitudes;
    bool converged = true;
};

inline InverseRoots inverse_roots(const IntPoly& p)
{
    InverseRoots out;
    const std::size_t d = p.degree();
    if (d == 0)
        return out;
    // reversed polynomial: coefficient of z^{d-j} is a_j, monic since a_0 = 1
    detail::RatPoly rev(d + 1);
    for (std::size_t j = 0; j <= d; ++j)
        rev[d - j] = Rational(p[j]);
    rev = detail::make_monic(rev);
    for (const auto& [factor, multiplicity] : detail::squarefree_factors(rev)) {
        const detail::RootResult r = detail::aberth_roots(factor);
        out.converged = out.converged && r.converged;
        for (const auto& root : r.roots) {
            for (std::size_t m = 0; m < multiplicity; ++m) {
                out.values.emplace_back(root.re.convert_to<double>(), root.im.convert_to<double>());
                out.magnitudes.push_back(root.abs());
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact necessary conditions

/// a_j = sign(a_d) a_{d-j} |a_d|^{(2j-d)/d} for every j, decided exactly by
/// comparing d-th powers together with signs.
inline CheckReport functional_equation_check(const QuotientPoly& quotient)
{
    CheckReport report;
    const IntPoly& p = quotient.poly;
    const std::size_t d = p.degree();
    if (d == 0)
        return report;
    const int s = sign(p.leading());
    const BigInt lead = quotient.abs_leading();
    for (std::size_t j = 0; j <= d; ++j) {
        const BigInt lhs = p[j];
        const BigInt rhs_base = s * p[d - j];
        const long long e = 2 * static_cast<long long>(j) - static_cast<long long>(d);
        bool pass = sign(lhs) == sign(rhs_base);
        if (pass && lhs != 0) {
            if (e >= 0)
                pass = ipow(lhs, d) == ipow(rhs_base, d) * ipow(lead, static_cast<std::uint64_t>(e));
            else
                pass = ipow(lhs, d) * ipow(lead, static_cast<std::uint64_t>(-e)) == ipow(rhs_base, d);
        }
        std::string rhs = rhs_base.str() + "*|a_d|^(" + std::to_string(e) + "/" + std::to_string(d) + ")";
        report.rows.push_back({j, pass, lhs.str(), rhs});
    }
    return report;
}

/// |S_r| <= d |a_d|^{r/d}, i.e. |S_r|^d <= d^d |a_d|^r, for r = 1..count.
inline bool power_sum_bounds_hold(const IntPoly& p, std::size_t count)
{
    const std::size_t d = p.degree();
    if (d == 0)
        return true;
    const PowerSumTable s = newton_power_sums(p, count);
    const BigInt lead = boost::multiprecision::abs(p.leading());
    const BigInt dd = ipow(BigInt(static_cast<unsigned long long>(d)), d);
    for (std::size_t r = 1; r <= count; ++r) {
        const BigInt sr = boost::multiprecision::abs(to_integer(s.at(r)));
        if (ipow(sr, d) > dd * ipow(lead, r))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// rha_check

struct RhaReport {
    Verdict verdict = Verdict::Inconclusive;
    BigInt q;
    std::size_t degree = 0;
    BigInt abs_leading; // exact pair (|a_d|, d)
    double lambda = 0.0;
    double target_magnitude = 1.0; // q^lambda
    std::vector<std::complex<double>> inverse_roots;
    std::vector<double> root_magnitudes;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::map<std::string, bool> checks;
    std::vector<std::string> notes;
};

inline RhaReport rha_check(const QuotientPoly& quotient, double tol = 1e-9)
{
    RhaReport report;
    report.q = quotient.q;
    report.degree = quotient.degree();
    report.abs_leading = quotient.abs_leading();
    report.lambda = quotient.lambda();
    report.tolerance = tol;
    const std::size_t d = report.degree;

    if (d == 0) {
        report.verdict = Verdict::Holds;
        report.notes.push_back("degree zero: the condition is vacuous");
        return report;
    }
    if (report.abs_leading == 1)
        report.notes.push_back("leading coefficient is +-1 (lambda = 0); the main-theorem hypothesis a_d not in {0, +-1} is not met");

    using detail::HighFloat;
    const HighFloat lead = detail::to_high(report.abs_leading);
    const HighFloat target = exp(log(lead) / d);
    report.target_magnitude = target.convert_to<double>();

    const InverseRoots roots = inverse_roots(quotient.poly);
    HighFloat worst = 0;
    HighFloat product = 1;
    for (std::size_t i = 0; i < roots.magnitudes.size(); ++i) {
        const HighFloat& m = roots.magnitudes[i];
        report.root_magnitudes.push_back(m.convert_to<double>());
        worst = std::max(worst, HighFloat(abs(m - target) / target));
        product *= m;
    }
    report.inverse_roots = roots.values;
    report.max_deviation = worst.convert_to<double>();

    const IntPoly squared = power_map(quotient.poly, 2);
    report.checks["exact_product"] =
        boost::multiprecision::abs(squared.leading()) == report.abs_leading * report.abs_leading;
    report.checks["functional_equation"] = functional_equation_check(quotient).all_pass();
    report.checks["power_sum_bounds"] = power_sum_bounds_hold(quotient.poly, 2 * d);
    report.checks["root_finder_converged"] = roots.converged;
    report.checks["numeric_product"] = abs(product - lead) <= HighFloat(d * tol) * lead;
    report.checks["magnitudes"] = report.max_deviation <= tol;

    const bool exact_ok = report.checks["exact_product"] && report.checks["functional_equation"] &&
                          report.checks["power_sum_bounds"];
    if (!exact_ok)
        report.verdict = Verdict::Fails;
    else if (!roots.converged)
        report.verdict = Verdict::Inconclusive;
    else if (report.max_deviation <= tol && report.checks["numeric_product"])
        report.verdict = Verdict::Holds;
    else if (report.max_deviation > 10 * tol)
        report.verdict = Verdict::Fails;
    else
        report.verdict = Verdict::Inconclusive;
    return report;
}

// ---------------------------------------------------------------------------
// Fixed-point bounds

/// q^r + 1 - d q^{lambda r} <= N_r <= q^r + 1 + d q^{lambda r}, decided exactly
/// as |N_r - q^r - 1|^d <= d^d |a_d|^r.
inline CheckReport rha_bounds_check(const FixedPointTable& n, const QuotientPoly& quotient)
{
    CheckReport report;
    const std::size_t d = quotient.degree();
    const BigInt lead = quotient.abs_leading();
    const BigInt dd = ipow(BigInt(static_cast<unsigned long long>(d)), d);
    const double qlambda = std::pow(lead.convert_to<double>(), d == 0 ? 0.0 : 1.0 / static_cast<double>(d));
    for (std::size_t r = 1; r <= n.size(); ++r) {
        const BigInt excess = boost::multiprecision::abs(n.at(r) - ipow(quotient.q, r) - 1);
        const bool pass = d == 0 ? excess == 0 : ipow(excess, d) <= dd * ipow(lead, r);
        const double bound = static_cast<double>(d) * std::pow(qlambda, static_cast<double>(r));
        std::ostringstream rhs;
        rhs.precision(12);
        rhs << bound;
        report.rows.push_back({r, pass, excess.str(), rhs.str()});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Restriction / twist equivalence at the level of the quotient polynomial

struct RestrictionReport {
    std::size_t r = 1;
    QuotientPoly restricted;
    RhaReport original;
    RhaReport restricted_report;
    bool verdicts_match = false;
    bool lambda_pair_ok = false;

    bool pass() const { return verdicts_match && lambda_pair_ok; }
};

inline RestrictionReport restriction_equivalence_check(const QuotientPoly& quotient, std::size_t r, double tol = 1e-9)
{
    RestrictionReport report;
    report.r = r;
    report.restricted = QuotientPoly(power_map(quotient.poly, r), ipow(quotient.q, r));
    report.original = rha_check(quotient, tol);
    report.restricted_report = rha_check(report.restricted, tol);
    report.verdicts_match = report.original.verdict == report.restricted_report.verdict;
    report.lambda_pair_ok = report.restricted.degree() == quotient.degree() &&
                            report.restricted.abs_leading() == ipow(quotient.abs_leading(), r);
    return report;
}

// ---------------------------------------------------------------------------
// Order of a covering (empirical)

/// How the Frobenius fibre count on the base is interpreted: q^r for the
/// projective line under Frobenius, or 1 for a bijective generator.
enum class FibreCount { Frobenius, Bijective };

struct OrderSample {
    std::size_t r = 0;
    BigInt lhs; // N_r(M) - N_r(L)
    BigInt rhs; // fibre count
};

struct OrderEstimate {
    double lambda_target = 0.0;
    std::vector<OrderSample> samples;
    double min_C = 0.0;
    std::size_t r_from = 1;
    std::size_t r_to = 1;
};

/// Smallest C >= 0 with |lhs(r)| <= C rhs(r)^lambda over the sampled range.
/// An estimate from finite data, not a certificate.
inline OrderEstimate estimate_covering_order(const FixedPointTable& base, const FixedPointTable& cover, double lambda,
                                             std::size_t r_from, std::size_t r_to,
                                             FibreCount fibre = FibreCount::Frobenius)
{
    if (r_from < 1 || r_from > r_to)
        throw Error(ErrorKind::EmptyRange, "order estimate over an empty range of r");
    if (lambda <= 0)
        throw Error(ErrorKind::BadParameters, "lambda must be positive");
    if (base.size() < r_to || cover.size() < r_to)
        throw Error(ErrorKind::InsufficientData, "fixed-point tables do not cover r <= " + std::to_string(r_to));
    OrderEstimate est;
    est.lambda_target = lambda;
    est.r_from = r_from;
    est.r_to = r_to;
    long double worst = 0.0L;
    for (std::size_t r = r_from; r <= r_to; ++r) {
        OrderSample s;
        s.r = r;
        s.lhs = cover.at(r) - base.at(r);
        s.rhs = fibre == FibreCount::Frobenius ? ipow(base.base_q, r) : BigInt(1);
        const long double ratio =
            std::fabs(s.lhs.convert_to<long double>()) / std::pow(s.rhs.convert_to<long double>(), static_cast<long double>(lambda));
        worst = std::max(worst, ratio);
        est.samples.push_back(std::move(s));
    }
    est.min_C = static_cast<double>(worst);
    return est;
}

} // namespace zetamod
