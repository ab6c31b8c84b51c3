#pragma once

// Exact rationals, truncated power series, integer polynomials and the
// Newton / Moebius machinery shared by the rest of the library.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace zetamod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& x)
{
    return boost::multiprecision::denominator(x) == 1;
}

inline BigInt to_integer(const Rational& x)
{
    if (!is_integer(x))
        throw Error(ErrorKind::NonIntegral, "value " + x.str() + " is not an integer");
    return boost::multiprecision::numerator(x);
}

inline BigInt ipow(const BigInt& base, std::uint64_t exponent)
{
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent > 0)
            b *= b;
    }
    return result;
}

inline Rational rpow(const Rational& base, std::int64_t exponent)
{
    if (exponent < 0)
        return Rational(1) / rpow(base, -exponent);
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e > 0) {
        if (e & 1U)
            result *= b;
        e >>= 1U;
        if (e > 0)
            b *= b;
    }
    return result;
}

inline int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// ---------------------------------------------------------------------------
// TruncSeries

/// A formal power series known exactly up to and including t^order.
class TruncSeries {
public:
    TruncSeries() : coeffs_(1) {}

    /// The zero series of the given truncation order.
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    TruncSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static TruncSeries one(std::size_t order)
    {
        TruncSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static TruncSeries from_integers(std::initializer_list<long long> values, std::size_t order)
    {
        std::vector<Rational> c;
        c.reserve(values.size());
        for (long long v : values)
            c.emplace_back(v);
        return TruncSeries(std::move(c), order);
    }

    static TruncSeries from_integers(const std::vector<BigInt>& values, std::size_t order)
    {
        std::vector<Rational> c(values.begin(), values.end());
        return TruncSeries(std::move(c), order);
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_integral() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
    }

    std::vector<BigInt> integer_coeffs() const
    {
        std::vector<BigInt> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(to_integer(c));
        return out;
    }

    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0)
                continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            bool unit = (mag == 1);
            if (!unit || i == 0)
                os << mag.str();
            if (i >= 1)
                os << "t";
            if (i >= 2)
                os << "^" << i;
        }
        if (first)
            os << "0";
        os << " + O(t^" << coeffs_.size() << ")";
        return os.str();
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t d = std::min(a.order(), b.order());
    std::vector<Rational> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        c[i] = a[i] + b[i];
    return TruncSeries(std::move(c), d);
}

inline TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t d = std::min(a.order(), b.order());
    std::vector<Rational> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        c[i] = a[i] - b[i];
    return TruncSeries(std::move(c), d);
}

inline TruncSeries series_scale(const TruncSeries& a, const Rational& k)
{
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c)
        x *= k;
    return TruncSeries(std::move(c), a.order());
}

/// Cauchy product truncated at the smaller of the two orders.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t d = std::min(a.order(), b.order());
    std::vector<Rational> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= d; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncSeries(std::move(c), d);
}

inline TruncSeries series_inv(const TruncSeries& a)
{
    if (a[0] == 0)
        throw Error(ErrorKind::ZeroConstantTerm, "series_inv needs a nonzero constant term");
    const std::size_t d = a.order();
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> b(d + 1);
    b[0] = inv0;
    for (std::size_t m = 1; m <= d; ++m) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= m; ++i)
            acc += a[i] * b[m - i];
        b[m] = -acc * inv0;
    }
    return TruncSeries(std::move(b), d);
}

/// a^n by repeated squaring; n may be astronomically large (orbit counts).
inline TruncSeries series_pow(const TruncSeries& a, BigInt n)
{
    if (n < 0)
        return series_pow(series_inv(a), -n);
    TruncSeries result = TruncSeries::one(a.order());
    TruncSeries base = a;
    while (n > 0) {
        if ((n & 1) != 0)
            result = series_mul(result, base);
        n >>= 1;
        if (n > 0)
            base = series_mul(base, base);
    }
    return result;
}

inline TruncSeries series_exp(const TruncSeries& a)
{
    if (a[0] != 0)
        throw Error(ErrorKind::BadConstantTerm, "series_exp needs a zero constant term");
    const std::size_t d = a.order();
    std::vector<Rational> b(d + 1);
    b[0] = 1;
    // m b_m = sum_{k=1}^m k a_k b_{m-k}
    for (std::size_t m = 1; m <= d; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k)
            if (a[k] != 0)
                acc += Rational(static_cast<long long>(k)) * a[k] * b[m - k];
        b[m] = acc / static_cast<long long>(m);
    }
    return TruncSeries(std::move(b), d);
}

inline TruncSeries series_log(const TruncSeries& a)
{
    if (a[0] != 1)
        throw Error(ErrorKind::BadConstantTerm, "series_log needs constant term 1");
    const std::size_t d = a.order();
    std::vector<Rational> c(d + 1);
    // m c_m = m a_m - sum_{k=1}^{m-1} k c_k a_{m-k}
    for (std::size_t m = 1; m <= d; ++m) {
        Rational acc = Rational(static_cast<long long>(m)) * a[m];
        for (std::size_t k = 1; k < m; ++k)
            if (a[m - k] != 0)
                acc -= Rational(static_cast<long long>(k)) * c[k] * a[m - k];
        c[m] = acc / static_cast<long long>(m);
    }
    return TruncSeries(std::move(c), d);
}

// ---------------------------------------------------------------------------
// IntPoly

/// Integer polynomial a_0 + a_1 t + ... + a_d t^d with a_d != 0 (or the constant 0).
class IntPoly {
public:
    IntPoly() : coeffs_{0} {}

    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    IntPoly(std::initializer_list<long long> coeffs)
    {
        for (long long c : coeffs)
            coeffs_.emplace_back(c);
        normalize();
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& leading() const { return coeffs_.back(); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    Rational eval(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + Rational(*it);
        return acc;
    }

    TruncSeries to_series(std::size_t order) const
    {
        std::vector<Rational> c(coeffs_.begin(), coeffs_.end());
        return TruncSeries(std::move(c), order);
    }

    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0)
                continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (mag != 1 || i == 0)
                os << mag;
            if (i >= 1)
                os << "t";
            if (i >= 2)
                os << "^" << i;
        }
        if (first)
            os << "0";
        return os.str();
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(c));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void normalize()
    {
        while (coeffs_.size() > 1 && coeffs_.back() == 0)
            coeffs_.pop_back();
        if (coeffs_.empty())
            coeffs_.emplace_back(0);
    }

    std::vector<BigInt> coeffs_;
};

/// S_1..S_R stored 0-based: values[r-1] = S_r.
struct PowerSumTable {
    std::vector<Rational> values;

    std::size_t size() const noexcept { return values.size(); }
    const Rational& at(std::size_t r) const { return values.at(r - 1); }
};

/// Power sums of the inverse roots of p (p(0) = 1) via Newton's identities
///   S_k + a_1 S_{k-1} + ... + a_{k-1} S_1 + k a_k = 0.
inline PowerSumTable newton_power_sums(const IntPoly& p, std::size_t count)
{
    if (p[0] != 1)
        throw Error(ErrorKind::BadConstantTerm, "newton_power_sums needs p(0) = 1");
    PowerSumTable out;
    out.values.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        BigInt s = -BigInt(static_cast<long long>(k)) * p.coeff(k);
        for (std::size_t i = 1; i < k && i <= p.degree(); ++i)
            s -= p[i] * to_integer(out.values[k - i - 1]);
        out.values.emplace_back(s);
    }
    return out;
}

/// Inverse of newton_power_sums: the polynomial with p(0) = 1 and deg <= degree
/// whose inverse roots have power sums S_1..S_degree. Intermediate values stay
/// rational; integrality is enforced at the end.
inline IntPoly poly_from_power_sums(const PowerSumTable& sums, std::size_t degree)
{
    if (sums.size() < degree)
        throw Error(ErrorKind::InsufficientData, "need at least " + std::to_string(degree) + " power sums");
    std::vector<Rational> a(degree + 1);
    a[0] = 1;
    for (std::size_t k = 1; k <= degree; ++k) {
        Rational acc = sums.at(k);
        for (std::size_t i = 1; i < k; ++i)
            acc += a[i] * sums.at(k - i);
        a[k] = -acc / static_cast<long long>(k);
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!is_integer(a[k]))
            throw Error(ErrorKind::NonIntegral,
                        "reconstructed coefficient a_" + std::to_string(k) + " = " + a[k].str());
        coeffs.push_back(boost::multiprecision::numerator(a[k]));
    }
    return IntPoly(std::move(coeffs));
}

/// The polynomial whose inverse roots are the r-th powers of those of p.
inline IntPoly power_map(const IntPoly& p, std::size_t r)
{
    if (r == 0)
        throw Error(ErrorKind::BadParameters, "power_map needs r >= 1");
    if (p[0] != 1)
        throw Error(ErrorKind::BadConstantTerm, "power_map needs p(0) = 1");
    const std::size_t d = p.degree();
    if (d == 0 || r == 1)
        return p;
    PowerSumTable s = newton_power_sums(p, r * d);
    PowerSumTable shifted;
    shifted.values.reserve(d);
    for (std::size_t k = 1; k <= d; ++k)
        shifted.values.push_back(s.at(r * k));
    return poly_from_power_sums(shifted, d);
}

// ---------------------------------------------------------------------------
// Moebius and divisors

inline int mobius(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::BadParameters, "mobius needs n >= 1");
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::BadParameters, "divisors needs n >= 1");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Smallest prime factor and exponent when n is a prime power; {0, 0} otherwise.
inline std::pair<BigInt, unsigned> prime_power_decomposition(const BigInt& n)
{
    if (n < 2)
        return {0, 0};
    BigInt p = 0;
    if ((n & 1) == 0) {
        p = 2;
    } else {
        for (BigInt f = 3; f * f <= n; f += 2) {
            if (n % f == 0) {
                p = f;
                break;
            }
        }
        if (p == 0)
            return {n, 1};
    }
    BigInt m = n;
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1)
        return {0, 0};
    return {p, e};
}

inline bool is_prime_power(const BigInt& n) { return prime_power_decomposition(n).second > 0; }

} // namespace zetamod
