#pragma once

// zeta-functions of locally finite modules via the Euler product, the
// exponential of fixed-point counts and the effective-divisor counts, plus
// extraction of the zeta-quotient P_M(t) = zeta_M(t) (1 - t)(1 - q t).

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "exactcore.hpp"
#include "spectrum.hpp"

namespace zetamod {

/// Base field size q (validated as a prime power) and truncation order D.
class ZetaContext {
public:
    ZetaContext(BigInt q, std::size_t order) : q_(std::move(q)), order_(order)
    {
        if (!is_prime_power(q_))
            throw Error(ErrorKind::NotPrimePower, "q = " + q_.str() + " is not a prime power");
        if (order_ < 1)
            throw Error(ErrorKind::BadParameters, "truncation order D must be >= 1");
    }

    const BigInt& q() const noexcept { return q_; }
    std::size_t order() const noexcept { return order_; }

private:
    BigInt q_;
    std::size_t order_;
};

/// values[m] = A_m, the number of effective divisors of degree m.
struct DivisorCountTable {
    std::vector<BigInt> values;

    std::size_t order() const noexcept { return values.empty() ? 0 : values.size() - 1; }
    const BigInt& at(std::size_t m) const { return values.at(m); }
};

/// A polynomial zeta-quotient together with its growth exponent
/// lambda = log_q |a_d|^{1/d}. The exact pair (|a_d|, d) is authoritative;
/// `lambda` is a floating shadow for display.
struct QuotientPoly {
    IntPoly poly;
    BigInt q;

    QuotientPoly() = default;
    QuotientPoly(IntPoly p, BigInt base) : poly(std::move(p)), q(std::move(base))
    {
        if (poly[0] != 1)
            throw Error(ErrorKind::BadConstantTerm, "a zeta-quotient has constant term 1");
    }

    std::size_t degree() const { return poly.degree(); }
    BigInt abs_leading() const { return boost::multiprecision::abs(poly.leading()); }

    double lambda() const
    {
        if (degree() == 0)
            return 0.0;
        const double la = std::log(abs_leading().convert_to<double>());
        const double lq = std::log(q.convert_to<double>());
        return la / (static_cast<double>(degree()) * lq);
    }

    /// True iff lambda equals num/den exactly, i.e. |a_d|^den == q^(d num).
    bool lambda_equals(std::uint64_t num, std::uint64_t den) const
    {
        if (degree() == 0)
            return num == 0;
        return ipow(abs_leading(), den) == ipow(q, degree() * num);
    }
};

inline TruncSeries zeta_euler(const OrbitSpectrum& s, const ZetaContext& ctx)
{
    if (s.base_q != ctx.q())
        throw Error(ErrorKind::BaseMismatch, "spectrum over q=" + s.base_q.str() + ", context q=" + ctx.q().str());
    const std::size_t d = ctx.order();
    if (!s.covers(d))
        throw Error(ErrorKind::HorizonExceeded,
                    "zeta to order " + std::to_string(d) + " needs horizon >= " + std::to_string(d));
    TruncSeries z = TruncSeries::one(d);
    for (std::size_t k = 1; k <= std::min(d, s.horizon); ++k) {
        const BigInt& b = s.counts[k - 1];
        if (b == 0)
            continue;
        std::vector<Rational> factor(d + 1);
        factor[0] = 1;
        factor[k] = -1;
        z = series_mul(z, series_pow(series_inv(TruncSeries(std::move(factor), d)), b));
    }
    return z;
}

/// exp(sum_r N_r t^r / r).
inline TruncSeries zeta_exp(const FixedPointTable& t, const ZetaContext& ctx)
{
    if (t.base_q != ctx.q())
        throw Error(ErrorKind::BaseMismatch, "fixed points over q=" + t.base_q.str() + ", context q=" + ctx.q().str());
    const std::size_t d = ctx.order();
    if (t.size() < d)
        throw Error(ErrorKind::InsufficientData,
                    "zeta_exp to order " + std::to_string(d) + " needs N_1..N_" + std::to_string(d));
    std::vector<Rational> c(d + 1);
    for (std::size_t r = 1; r <= d; ++r)
        c[r] = Rational(t.at(r)) / static_cast<long long>(r);
    return series_exp(TruncSeries(std::move(c), d));
}

/// Effective divisors counted combinatorially: choosing a multiset of total
/// size j among the B_k orbits of degree k can be done in C(B_k + j - 1, j)
/// ways and contributes degree k j. Bounded-knapsack DP over degrees; it never
/// touches the series code.
inline DivisorCountTable divisor_counts_bruteforce(const OrbitSpectrum& s, std::size_t order)
{
    if (!s.covers(order))
        throw Error(ErrorKind::HorizonExceeded,
                    "divisor counts to degree " + std::to_string(order) + " exceed the horizon");
    std::vector<BigInt> a(order + 1);
    a[0] = 1;
    for (std::size_t k = 1; k <= std::min(order, s.horizon); ++k) {
        const BigInt& b = s.counts[k - 1];
        if (b == 0)
            continue;
        // ways[j] = C(b + j - 1, j)
        const std::size_t jmax = order / k;
        std::vector<BigInt> ways(jmax + 1);
        ways[0] = 1;
        for (std::size_t j = 1; j <= jmax; ++j)
            ways[j] = ways[j - 1] * (b + j - 1) / j;
        std::vector<BigInt> next(order + 1);
        for (std::size_t m = 0; m <= order; ++m) {
            if (a[m] == 0)
                continue;
            for (std::size_t j = 0; m + j * k <= order; ++j)
                next[m + j * k] += a[m] * ways[j];
        }
        a = std::move(next);
    }
    return DivisorCountTable{std::move(a)};
}

inline TruncSeries divisor_count_series(const DivisorCountTable& a)
{
    return TruncSeries::from_integers(a.values, a.order());
}

/// P_M(t) = zeta_M(t) (1 - t)(1 - q t), i.e.
/// a_m = A_m - (q + 1) A_{m-1} + q A_{m-2}.
inline TruncSeries zeta_quotient(const TruncSeries& z, const ZetaContext& ctx)
{
    if (z[0] != 1)
        throw Error(ErrorKind::BadConstantTerm, "a zeta-function has constant term 1");
    const std::size_t d = z.order();
    const Rational q(ctx.q());
    std::vector<Rational> p(d + 1);
    for (std::size_t m = 0; m <= d; ++m) {
        p[m] = z[m];
        if (m >= 1)
            p[m] -= (q + 1) * z[m - 1];
        if (m >= 2)
            p[m] += q * z[m - 2];
    }
    return TruncSeries(std::move(p), d);
}

/// 1 / ((1 - t)(1 - q t)) truncated: the zeta-function of the projective line.
inline TruncSeries projective_line_zeta(const BigInt& q, std::size_t order)
{
    std::vector<Rational> c(order + 1);
    BigInt qp = 1;
    BigInt acc = 0;
    for (std::size_t m = 0; m <= order; ++m) {
        acc += qp;
        c[m] = acc;
        qp *= q;
    }
    return TruncSeries(std::move(c), order);
}

/// Certifies polynomiality only within the truncation: the final `tail`
/// coefficients must vanish and the rest must be integers.
inline std::optional<QuotientPoly> detect_polynomial(const TruncSeries& p, const BigInt& q, std::size_t tail)
{
    if (tail < 1)
        throw Error(ErrorKind::BadParameters, "detect_polynomial needs tail >= 1");
    if (tail > p.order())
        return std::nullopt;
    if (p[0] != 1)
        return std::nullopt;
    const std::size_t keep = p.order() + 1 - tail;
    for (std::size_t i = keep; i <= p.order(); ++i)
        if (p[i] != 0)
            return std::nullopt;
    std::vector<BigInt> c;
    c.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        if (!is_integer(p[i]))
            return std::nullopt;
        c.push_back(boost::multiprecision::numerator(p[i]));
    }
    return QuotientPoly(IntPoly(std::move(c)), q);
}

inline std::size_t default_tail(std::size_t order) { return std::max<std::size_t>(5, order / 4); }

// ---------------------------------------------------------------------------
// Generic Riemann-Roch and power-sum checks

struct IndexedCheck {
    std::size_t index = 0;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::vector<IndexedCheck> rows;

    bool all_pass() const
    {
        for (const auto& r : rows)
            if (!r.pass)
                return false;
        return true;
    }

    std::optional<std::size_t> first_failure() const
    {
        for (const auto& r : rows)
            if (!r.pass)
                return r.index;
        return std::nullopt;
    }
};

/// A_n = (q^{n+1} P(1/q) - P(1)) / (q - 1) for n = n0..D.
inline CheckReport generic_rr_check(const DivisorCountTable& a, const QuotientPoly& quotient, std::size_t n0)
{
    CheckReport report;
    const Rational q(quotient.q);
    const Rational p_inv_q = quotient.poly.eval(Rational(1) / q);
    const Rational p_one = quotient.poly.eval(Rational(1));
    for (std::size_t n = n0; n <= a.order(); ++n) {
        const Rational predicted = (rpow(q, static_cast<std::int64_t>(n + 1)) * p_inv_q - p_one) / (q - 1);
        const Rational actual(a.at(n));
        report.rows.push_back({n, predicted == actual, actual.str(), predicted.str()});
    }
    return report;
}

/// A_m = sum_{i <= m} a_i (q^{m-i+1} - 1) / (q - 1).
inline BigInt divisor_count_from_quotient(const QuotientPoly& quotient, std::size_t m)
{
    BigInt total = 0;
    const BigInt& q = quotient.q;
    for (std::size_t i = 0; i <= std::min(m, quotient.degree()); ++i)
        total += quotient.poly[i] * ((ipow(q, m - i + 1) - 1) / (q - 1));
    return total;
}

/// (q^r + 1) - N_r == S_r for r = 1..R.
inline CheckReport power_sum_check(const FixedPointTable& n, const QuotientPoly& quotient, std::size_t count)
{
    if (count > n.size())
        throw Error(ErrorKind::InsufficientData, "power_sum_check needs N_1..N_" + std::to_string(count));
    CheckReport report;
    const PowerSumTable s = newton_power_sums(quotient.poly, count);
    for (std::size_t r = 1; r <= count; ++r) {
        const BigInt lhs = ipow(quotient.q, r) + 1 - n.at(r);
        const BigInt rhs = to_integer(s.at(r));
        report.rows.push_back({r, lhs == rhs, lhs.str(), rhs.str()});
    }
    return report;
}

/// Fixed-point counts implied by a polynomial quotient: N_r = q^r + 1 - S_r.
inline FixedPointTable predicted_fixed_points(const QuotientPoly& quotient, std::size_t count)
{
    const PowerSumTable s = newton_power_sums(quotient.poly, count);
    FixedPointTable t;
    t.base_q = quotient.q;
    for (std::size_t r = 1; r <= count; ++r)
        t.values.push_back(ipow(quotient.q, r) + 1 - to_integer(s.at(r)));
    return t;
}

} // namespace zetamod
