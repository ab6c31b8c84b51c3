#pragma once

// Explicit finite fields, brute-force point counts of plane projective curves
// over F_{q^r}, Weil polynomials from counts, and the spectra of the
// projective line and of the non-projective example module.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcore.hpp"
#include "spectrum.hpp"
#include "zetafn.hpp"

namespace zetamod {

inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000'000ULL;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

namespace detail {

// Polynomials over F_p, lowest degree first, trimmed so the last entry is nonzero
// (the zero polynomial is empty).
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p)
{
    // a^(p-2)
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return result;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint64_t p)
{
    fp_trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t inv_lead = fp_inv(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j <= df; ++j)
            a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(c), f, p);
}

inline FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p)
{
    FpPoly result{1};
    base = fp_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1U)
            result = fp_mulmod(result, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1U;
    }
    return result;
}

inline FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    fp_trim(a);
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p)
{
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// f (monic, degree e) is irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= e/2.
inline bool fp_is_irreducible(const FpPoly& f, std::uint64_t p)
{
    const std::size_t e = f.size() - 1;
    if (e == 0)
        return false;
    if (e == 1)
        return true;
    const FpPoly x{0, 1};
    FpPoly h = fp_mod(x, f, p);
    for (std::size_t i = 1; i <= e / 2; ++i) {
        h = fp_powmod(h, p, f, p);
        const FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
        if (g.size() > 1)
            return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f != 0)
            continue;
        out.push_back(f);
        while (n % f == 0)
            n /= f;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace detail

/// F_q with q = p^e, elements encoded as integers whose base-p digits are the
/// coefficients of the residue polynomial (little-endian).
class FqField {
public:
    using Element = std::uint64_t;

    FqField(std::uint64_t p, std::size_t e, std::vector<std::uint64_t> modulus)
        : p_(p), e_(e), modulus_(std::move(modulus))
    {
        q_ = 1;
        for (std::size_t i = 0; i < e_; ++i)
            q_ *= p_;
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    std::size_t extension_degree() const noexcept { return e_; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    /// The residue class of the integer n.
    Element from_integer(long long n) const
    {
        long long r = n % static_cast<long long>(p_);
        if (r < 0)
            r += static_cast<long long>(p_);
        return static_cast<Element>(r);
    }

    Element from_digits(const std::vector<std::uint64_t>& digits) const
    {
        Element code = 0;
        for (std::size_t i = digits.size(); i-- > 0;)
            code = code * p_ + digits[i] % p_;
        return code;
    }

    std::vector<std::uint64_t> to_digits(Element a) const
    {
        std::vector<std::uint64_t> d(e_, 0);
        for (std::size_t i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Element add(Element a, Element b) const
    {
        Element out = 0, scale = 1;
        for (std::size_t i = 0; i < e_; ++i) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }

    Element neg(Element a) const
    {
        Element out = 0, scale = 1;
        for (std::size_t i = 0; i < e_; ++i) {
            out += ((p_ - a % p_) % p_) * scale;
            a /= p_;
            scale *= p_;
        }
        return out;
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const
    {
        return pack(detail::fp_mulmod(unpack(a), unpack(b), modulus_, p_));
    }

    Element pow(Element a, std::uint64_t n) const { return pack(detail::fp_powmod(unpack(a), n, modulus_, p_)); }

    Element inv(Element a) const
    {
        if (a == 0)
            throw Error(ErrorKind::BadParameters, "inverse of zero");
        return pow(a, q_ - 2);
    }

    Element frobenius(Element a) const { return pow(a, p_); }

    friend bool operator==(const FqField& a, const FqField& b)
    {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

private:
    detail::FpPoly unpack(Element a) const
    {
        detail::FpPoly v = to_digits(a);
        detail::fp_trim(v);
        return v;
    }

    Element pack(const detail::FpPoly& v) const { return from_digits(v); }

    std::uint64_t p_;
    std::size_t e_;
    std::vector<std::uint64_t> modulus_; // monic, size e + 1
    std::uint64_t q_;
};

inline constexpr std::size_t kMaxExtensionDegree = 12;

/// F_{p^e} with the lexicographically smallest monic irreducible modulus,
/// ordering candidates by the integer whose base-p digits are c_0..c_{e-1}.
inline FqField build_field(std::uint64_t p, std::size_t e)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1 || e > kMaxExtensionDegree)
        throw Error(ErrorKind::DegreeTooLarge, "extension degree must lie in 1..12, got " + std::to_string(e));
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < e; ++i)
        candidates *= p;
    for (std::uint64_t code = 0; code < candidates; ++code) {
        std::vector<std::uint64_t> f(e + 1, 0);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < e; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[e] = 1;
        if (detail::fp_is_irreducible(f, p))
            return FqField(p, e, std::move(f));
    }
    throw Error(ErrorKind::BadParameters, "no irreducible polynomial found");
}

/// F_{p^e} with a caller-chosen monic modulus (c_0..c_{e-1}, 1).
inline FqField build_field(std::uint64_t p, std::size_t e, const std::vector<std::uint64_t>& modulus)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1 || e > kMaxExtensionDegree)
        throw Error(ErrorKind::DegreeTooLarge, "extension degree must lie in 1..12, got " + std::to_string(e));
    if (modulus.size() != e + 1 || modulus.back() != 1)
        throw Error(ErrorKind::BadParameters, "modulus must be monic of degree e");
    std::vector<std::uint64_t> f(modulus);
    for (auto& c : f)
        c %= p;
    if (!detail::fp_is_irreducible(f, p))
        throw Error(ErrorKind::BadParameters, "modulus is reducible over F_" + std::to_string(p));
    return FqField(p, e, std::move(f));
}

namespace detail {

/// Discrete-log and Zech-log tables: elements are represented by their log
/// to a primitive root, with kZero standing for 0. One multiplication is an
/// addition mod q-1, one addition is a Zech lookup.
class LogField {
public:
    static constexpr std::uint32_t kZero = 0xFFFFFFFFU;

    explicit LogField(const FqField& field) : order_(static_cast<std::uint32_t>(field.order() - 1))
    {
        const std::uint64_t q = field.order();
        const std::vector<std::uint64_t> primes = prime_factors(q - 1);
        FqField::Element gen = 0;
        for (FqField::Element g = 1; g < q; ++g) {
            bool primitive = true;
            for (std::uint64_t l : primes)
                if (field.pow(g, (q - 1) / l) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = g;
                break;
            }
        }
        exp_.resize(order_);
        log_.assign(q, kZero);
        FqField::Element x = 1;
        for (std::uint32_t i = 0; i < order_; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = field.mul(x, gen);
        }
        // zech[i] = log(1 + g^i); adding one only touches the constant digit
        const std::uint64_t p = field.characteristic();
        zech_.resize(order_);
        for (std::uint32_t i = 0; i < order_; ++i) {
            const std::uint64_t c = exp_[i];
            const std::uint64_t bumped = c - c % p + (c % p + 1) % p;
            zech_[i] = log_[bumped];
        }
    }

    std::uint32_t from_code(FqField::Element a) const { return log_.at(a); }
    FqField::Element to_code(std::uint32_t a) const { return a == kZero ? 0 : exp_[a]; }
    std::uint32_t size() const { return order_ + 1; }
    /// Enumerates every element: index 0 is zero, index i > 0 is g^{i-1}.
    std::uint32_t element(std::uint32_t index) const { return index == 0 ? kZero : index - 1; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        if (a == kZero || b == kZero)
            return kZero;
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= order_ ? s - order_ : s);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const
    {
        if (n == 0)
            return 0;
        if (a == kZero)
            return kZero;
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * n) % order_);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        if (a == kZero)
            return b;
        if (b == kZero)
            return a;
        const std::uint32_t diff = b >= a ? b - a : b + order_ - a;
        const std::uint32_t z = zech_[diff];
        if (z == kZero)
            return kZero;
        const std::uint64_t s = static_cast<std::uint64_t>(a) + z;
        return static_cast<std::uint32_t>(s >= order_ ? s - order_ : s);
    }

private:
    std::uint32_t order_;
    std::vector<FqField::Element> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

} // namespace detail

/// F_{q^r} as F_p^{e r}, together with the images of the elements of F_q
/// under an embedding that sends the generator of F_q to a root of its
/// modulus inside the extension.
struct FieldExtension {
    FqField field;
    std::vector<FqField::Element> embedding; // embedding[code in F_q] = code in F_{q^r}
};

inline FieldExtension extend_field(const FqField& base, std::size_t r)
{
    if (r < 1)
        throw Error(ErrorKind::BadParameters, "extension degree r must be >= 1");
    const std::size_t total = base.extension_degree() * r;
    if (total > kMaxExtensionDegree * 4)
        throw Error(ErrorKind::BudgetExceeded, "extension degree " + std::to_string(total) + " is out of reach");
    FqField big = r == 1 ? base : build_field(base.characteristic(), total);
    std::vector<FqField::Element> embed(base.order());
    if (r == 1 || base.extension_degree() == 1) {
        for (FqField::Element c = 0; c < base.order(); ++c)
            embed[c] = c;
        return {std::move(big), std::move(embed)};
    }
    const auto& f = base.modulus();
    FqField::Element alpha = 0;
    bool found = false;
    for (FqField::Element a = 0; a < big.order() && !found; ++a) {
        FqField::Element acc = 0;
        for (std::size_t i = f.size(); i-- > 0;)
            acc = big.add(big.mul(acc, a), static_cast<FqField::Element>(f[i]));
        if (acc == 0) {
            alpha = a;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorKind::BadParameters, "no root of the base modulus in the extension");
    for (FqField::Element c = 0; c < base.order(); ++c) {
        const auto digits = base.to_digits(c);
        FqField::Element acc = 0;
        for (std::size_t i = digits.size(); i-- > 0;)
            acc = big.add(big.mul(acc, alpha), static_cast<FqField::Element>(digits[i]));
        embed[c] = acc;
    }
    return {std::move(big), std::move(embed)};
}

// ---------------------------------------------------------------------------
// Curves

enum class CurveKind { SmoothPlane, Weierstrass, Custom };

inline std::string to_string(CurveKind k)
{
    switch (k) {
    case CurveKind::SmoothPlane: return "smooth_plane";
    case CurveKind::Weierstrass: return "weierstrass";
    case CurveKind::Custom: return "custom";
    }
    return "custom";
}

/// coeff * x^i y^j z^k
struct Monomial {
    unsigned i = 0, j = 0, k = 0;
    FqField::Element coeff = 0;
};

/// Homogeneous plane curve F(x, y, z) = 0 over F_q.
class CurveModel {
public:
    CurveModel(FqField field, unsigned degree, std::vector<Monomial> monomials, CurveKind kind,
               std::optional<unsigned> genus = std::nullopt)
        : field_(std::move(field)), degree_(degree), kind_(kind)
    {
        for (const auto& m : monomials) {
            if (m.i + m.j + m.k != degree)
                throw Error(ErrorKind::BadParameters, "monomial is not of degree " + std::to_string(degree));
            if (m.coeff >= field_.order())
                throw Error(ErrorKind::BadParameters, "coefficient is not an element of F_q");
            merge(m);
        }
        switch (kind_) {
        case CurveKind::SmoothPlane:
            genus_ = (degree - 1) * (degree - 2) / 2;
            if (genus && *genus != genus_)
                throw Error(ErrorKind::BadParameters, "a smooth plane curve of degree " + std::to_string(degree) +
                                                          " has genus " + std::to_string(genus_));
            break;
        case CurveKind::Weierstrass:
            if (degree != 3)
                throw Error(ErrorKind::BadParameters, "a Weierstrass curve is a cubic");
            if (genus && *genus != 1)
                throw Error(ErrorKind::BadParameters, "a Weierstrass curve has genus 1");
            genus_ = 1;
            if (weierstrass_discriminant() == 0)
                throw Error(ErrorKind::BadParameters, "Weierstrass discriminant vanishes (singular cubic)");
            break;
        case CurveKind::Custom:
            if (!genus)
                throw Error(ErrorKind::BadParameters, "a custom curve needs an asserted genus");
            genus_ = *genus;
            break;
        }
    }

    const FqField& field() const noexcept { return field_; }
    unsigned degree() const noexcept { return degree_; }
    unsigned genus() const noexcept { return genus_; }
    CurveKind kind() const noexcept { return kind_; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

    FqField::Element coefficient(unsigned i, unsigned j, unsigned k) const
    {
        for (const auto& m : monomials_)
            if (m.i == i && m.j == j && m.k == k)
                return m.coeff;
        return 0;
    }

    /// Discriminant of y^2 z + a1 xyz + a3 yz^2 = x^3 + a2 x^2 z + a4 x z^2 + a6 z^3
    /// after scaling; throws if the cubic is not of that shape.
    FqField::Element weierstrass_discriminant() const
    {
        const FqField& f = field_;
        for (const auto& m : monomials_) {
            const bool allowed = (m.i == 0 && m.j == 2 && m.k == 1) || (m.i == 1 && m.j == 1 && m.k == 1) ||
                                 (m.i == 0 && m.j == 1 && m.k == 2) || (m.i == 3 && m.j == 0 && m.k == 0) ||
                                 (m.i == 2 && m.j == 0 && m.k == 1) || (m.i == 1 && m.j == 0 && m.k == 2) ||
                                 (m.i == 0 && m.j == 0 && m.k == 3);
            if (!allowed && m.coeff != 0)
                throw Error(ErrorKind::BadParameters, "cubic is not in Weierstrass form");
        }
        const auto u = coefficient(0, 2, 1);
        if (u == 0 || coefficient(3, 0, 0) != f.neg(u))
            throw Error(ErrorKind::BadParameters, "Weierstrass form needs coeff(x^3) = -coeff(y^2 z) != 0");
        const auto uinv = f.inv(u);
        const auto a1 = f.mul(coefficient(1, 1, 1), uinv);
        const auto a3 = f.mul(coefficient(0, 1, 2), uinv);
        const auto a2 = f.neg(f.mul(coefficient(2, 0, 1), uinv));
        const auto a4 = f.neg(f.mul(coefficient(1, 0, 2), uinv));
        const auto a6 = f.neg(f.mul(coefficient(0, 0, 3), uinv));
        auto k = [&](long long n) { return f.from_integer(n); };
        auto mul = [&](auto a, auto b) { return f.mul(a, b); };
        auto add = [&](auto a, auto b) { return f.add(a, b); };
        auto sub = [&](auto a, auto b) { return f.sub(a, b); };
        const auto b2 = add(mul(a1, a1), mul(k(4), a2));
        const auto b4 = add(mul(k(2), a4), mul(a1, a3));
        const auto b6 = add(mul(a3, a3), mul(k(4), a6));
        const auto b8 = sub(add(add(mul(mul(a1, a1), a6), mul(mul(k(4), a2), a6)), mul(a2, mul(a3, a3))),
                            add(mul(mul(a1, a3), a4), mul(a4, a4)));
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        auto disc = f.neg(mul(mul(b2, b2), b8));
        disc = sub(disc, mul(k(8), mul(b4, mul(b4, b4))));
        disc = sub(disc, mul(k(27), mul(b6, b6)));
        disc = add(disc, mul(k(9), mul(b2, mul(b4, b6))));
        return disc;
    }

private:
    void merge(const Monomial& m)
    {
        for (auto& existing : monomials_)
            if (existing.i == m.i && existing.j == m.j && existing.k == m.k) {
                existing.coeff = field_.add(existing.coeff, m.coeff);
                return;
            }
        monomials_.push_back(m);
    }

    FqField field_;
    unsigned degree_;
    std::vector<Monomial> monomials_;
    CurveKind kind_;
    unsigned genus_ = 0;
};

/// Number of chart evaluations count_points(c, r) performs.
inline BigInt point_count_cost(const CurveModel& c, std::size_t r)
{
    const BigInt qr = ipow(BigInt(c.field().order()), r);
    return qr * qr + qr + 1;
}

/// |{[x:y:z] in P^2(F_{q^r}) : F = 0}| over the charts z = 1, then
/// (z = 0, y = 1), then (z = y = 0, x = 1).
inline BigInt count_points(const CurveModel& c, std::size_t r, std::uint64_t budget = kDefaultPointBudget)
{
    if (r < 1)
        throw Error(ErrorKind::BadParameters, "count_points needs r >= 1");
    const BigInt cost = point_count_cost(c, r);
    if (cost > budget)
        throw Error(ErrorKind::BudgetExceeded, "counting over F_{q^" + std::to_string(r) + "} needs " + cost.str() +
                                                   " evaluations (budget " + std::to_string(budget) + ")");
    const FieldExtension ext = extend_field(c.field(), r);
    const detail::LogField lf(ext.field);
    constexpr std::uint32_t kZero = detail::LogField::kZero;
    const unsigned n = c.degree();

    struct Term {
        unsigned i, j, k;
        std::uint32_t coeff;
    };
    std::vector<Term> terms;
    for (const auto& m : c.monomials()) {
        const std::uint32_t lc = lf.from_code(ext.embedding[m.coeff]);
        if (lc != kZero)
            terms.push_back({m.i, m.j, m.k, lc});
    }

    std::uint64_t total = 0;
    const std::uint32_t size = lf.size();
    std::vector<std::uint32_t> by_y(n + 1);

    // chart z = 1
    for (std::uint32_t xi = 0; xi < size; ++xi) {
        const std::uint32_t x = lf.element(xi);
        std::fill(by_y.begin(), by_y.end(), kZero);
        for (const auto& t : terms)
            by_y[t.j] = lf.add(by_y[t.j], lf.mul(t.coeff, lf.pow(x, t.i)));
        for (std::uint32_t yi = 0; yi < size; ++yi) {
            const std::uint32_t y = lf.element(yi);
            std::uint32_t acc = by_y[n];
            for (unsigned j = n; j-- > 0;)
                acc = lf.add(lf.mul(acc, y), by_y[j]);
            if (acc == kZero)
                ++total;
        }
    }
    // chart z = 0, y = 1
    for (std::uint32_t xi = 0; xi < size; ++xi) {
        const std::uint32_t x = lf.element(xi);
        std::uint32_t acc = kZero;
        for (const auto& t : terms)
            if (t.k == 0)
                acc = lf.add(acc, lf.mul(t.coeff, lf.pow(x, t.i)));
        if (acc == kZero)
            ++total;
    }
    // the point [1:0:0]
    std::uint32_t corner = kZero;
    for (const auto& t : terms)
        if (t.i == n)
            corner = lf.add(corner, t.coeff);
    if (corner == kZero)
        ++total;
    return BigInt(total);
}

/// Point counts and the Weil polynomial of a curve of known genus.
struct CurveZetaData {
    FixedPointTable counts; // brute-force N_1..N_{2g+1}
    IntPoly weil_poly;
    unsigned genus = 0;

    QuotientPoly quotient() const { return QuotientPoly(weil_poly, counts.base_q); }
};

/// S_r = q^r + 1 - N_r for r <= 2g gives the Weil polynomial by Newton's
/// identities; the result must be integral, satisfy P(t) = P(1/(qt)) q^g t^{2g},
/// and predict the one extra count N_{2g+1}.
inline CurveZetaData curve_zeta(const CurveModel& c, std::uint64_t budget = kDefaultPointBudget)
{
    const unsigned g = c.genus();
    const BigInt q(c.field().order());
    CurveZetaData data;
    data.genus = g;
    data.counts.base_q = q;
    for (std::size_t r = 1; r <= 2 * g + 1; ++r)
        data.counts.values.push_back(count_points(c, r, budget));

    PowerSumTable s;
    for (std::size_t r = 1; r <= 2 * g; ++r)
        s.values.emplace_back(ipow(q, r) + 1 - data.counts.at(r));
    data.weil_poly = poly_from_power_sums(s, 2 * g);

    const IntPoly& p = data.weil_poly;
    for (unsigned j = 0; j <= 2 * g; ++j) {
        // a_{2g-j} = q^{g-j} a_j
        const bool ok = j <= g ? p.coeff(2 * g - j) == ipow(q, g - j) * p.coeff(j)
                               : p.coeff(2 * g - j) * ipow(q, j - g) == p.coeff(j);
        if (!ok)
            throw Error(ErrorKind::FunctionalEquationViolated,
                        "Weil polynomial " + p.str() + " violates the curve functional equation at j = " +
                            std::to_string(j));
    }

    const std::size_t extra = 2 * g + 1;
    const BigInt predicted = ipow(q, extra) + 1 - to_integer(newton_power_sums(p, extra).at(extra));
    if (predicted != data.counts.at(extra))
        throw Error(ErrorKind::PredictionMismatch, "predicted N_" + std::to_string(extra) + " = " + predicted.str() +
                                                       ", counted " + data.counts.at(extra).str());
    return data;
}

/// N_1..N_count for a curve: brute-force counts where available, then values
/// predicted from the Weil polynomial.
inline FixedPointTable curve_fixed_points(const CurveZetaData& data, std::size_t count)
{
    FixedPointTable t = predicted_fixed_points(data.quotient(), count);
    for (std::size_t r = 1; r <= std::min(count, data.counts.size()); ++r)
        t.values[r - 1] = data.counts.at(r);
    return t;
}

// ---------------------------------------------------------------------------
// Example modules

/// Orbit spectrum of P^1 over F_q up to the given horizon (N_r = q^r + 1).
inline OrbitSpectrum projective_line_spectrum(const BigInt& q, std::size_t horizon)
{
    if (!is_prime_power(q))
        throw Error(ErrorKind::NotPrimePower, "q = " + q.str() + " is not a prime power");
    FixedPointTable t;
    t.base_q = q;
    for (std::size_t r = 1; r <= horizon; ++r)
        t.values.push_back(ipow(q, r) + 1);
    return spectrum_from_fixed_points(t);
}

/// Fixed points of the non-projective example: N_r = q^{rm} - d q^r + 1,
/// viewed over the base field of size q^m.
inline FixedPointTable nonprojective_fixed_points(const BigInt& q, std::size_t m, std::size_t d, std::size_t count)
{
    if (!is_prime_power(q))
        throw Error(ErrorKind::NotPrimePower, "q = " + q.str() + " is not a prime power");
    if (m < 1 || d > m)
        throw Error(ErrorKind::BadParameters, "need m >= 1 and d <= m");
    FixedPointTable t;
    t.base_q = ipow(q, m);
    for (std::size_t r = 1; r <= count; ++r)
        t.values.push_back(ipow(q, r * m) - BigInt(static_cast<unsigned long long>(d)) * ipow(q, r) + 1);
    return t;
}

/// Realized by Moebius inversion; realizability is checked, not assumed.
inline OrbitSpectrum nonprojective_module(const BigInt& q, std::size_t m, std::size_t d, std::size_t horizon)
{
    return spectrum_from_fixed_points(nonprojective_fixed_points(q, m, d, horizon));
}

} // namespace zetamod
