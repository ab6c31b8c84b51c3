#pragma once

// Orbit spectra of locally finite modules over the absolute Galois group of
// F_q, and the dictionary between orbit counts B_k and fixed-point counts N_r.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "exactcore.hpp"

namespace zetamod {

/// k -> B_k for k = 1..horizon. When `complete` is set every B_k beyond the
/// horizon is known to be zero, i.e. the module is finite and fully described.
struct OrbitSpectrum {
    BigInt base_q = 2;
    std::vector<BigInt> counts; // counts[k-1] = B_k
    std::size_t horizon = 0;
    bool complete = false;

    OrbitSpectrum() = default;

    OrbitSpectrum(BigInt q, std::vector<BigInt> b, bool is_complete)
        : base_q(std::move(q)), counts(std::move(b)), horizon(counts.size()), complete(is_complete)
    {
        for (const auto& c : counts)
            if (c < 0)
                throw Error(ErrorKind::NonRealizable, "orbit counts must be non-negative");
    }

    /// B_k; zero beyond the horizon of a complete spectrum.
    BigInt count(std::size_t k) const
    {
        if (k == 0)
            return 0;
        if (k <= horizon)
            return counts[k - 1];
        if (complete)
            return 0;
        throw Error(ErrorKind::HorizonExceeded,
                    "B_" + std::to_string(k) + " requested beyond horizon " + std::to_string(horizon));
    }

    /// Largest degree that can be queried without error.
    bool covers(std::size_t k) const { return complete || k <= horizon; }

    BigInt total_points() const
    {
        BigInt total = 0;
        for (std::size_t k = 1; k <= horizon; ++k)
            total += BigInt(static_cast<unsigned long long>(k)) * counts[k - 1];
        return total;
    }

    friend bool operator==(const OrbitSpectrum& a, const OrbitSpectrum& b)
    {
        return a.base_q == b.base_q && a.counts == b.counts && a.horizon == b.horizon && a.complete == b.complete;
    }
};

/// values[r-1] = N_r = |M^{phi^r}|.
struct FixedPointTable {
    BigInt base_q = 2;
    std::vector<BigInt> values;

    std::size_t size() const noexcept { return values.size(); }
    const BigInt& at(std::size_t r) const { return values.at(r - 1); }

    friend bool operator==(const FixedPointTable& a, const FixedPointTable& b)
    {
        return a.base_q == b.base_q && a.values == b.values;
    }
};

inline FixedPointTable fixed_points(const OrbitSpectrum& s, std::size_t count)
{
    if (!s.covers(count))
        throw Error(ErrorKind::HorizonExceeded, "fixed_points up to r = " + std::to_string(count) +
                                                    " needs horizon >= r (have " + std::to_string(s.horizon) + ")");
    FixedPointTable t;
    t.base_q = s.base_q;
    t.values.assign(count, 0);
    for (std::size_t k = 1; k <= std::min(count, s.horizon); ++k) {
        const BigInt& b = s.counts[k - 1];
        if (b == 0)
            continue;
        const BigInt contribution = BigInt(static_cast<unsigned long long>(k)) * b;
        for (std::size_t r = k; r <= count; r += k)
            t.values[r - 1] += contribution;
    }
    return t;
}

/// Moebius inversion B_k = (1/k) sum_{d|k} mu(k/d) N_d. The result is never
/// marked complete: N_1..N_R say nothing about orbits of degree > R.
inline OrbitSpectrum spectrum_from_fixed_points(const FixedPointTable& t)
{
    std::vector<BigInt> b(t.size());
    for (std::size_t k = 1; k <= t.size(); ++k) {
        BigInt acc = 0;
        for (auto d : divisors(k)) {
            int mu = mobius(k / d);
            if (mu != 0)
                acc += mu * t.at(d);
        }
        if (acc % k != 0 || acc < 0)
            throw Error(ErrorKind::NonRealizable, "B_" + std::to_string(k) + " = " + acc.str() + "/" +
                                                      std::to_string(k) + " is not a non-negative integer");
        b[k - 1] = acc / k;
    }
    return OrbitSpectrum(t.base_q, std::move(b), false);
}

/// Restriction to the subgroup generated by phi^r: an orbit of degree m splits
/// into gcd(m, r) orbits of degree m / gcd(m, r), over the base field q^r.
///
/// For a truncated spectrum the new horizon is floor(horizon / r): an orbit of
/// unknown degree up to horizon * r can land at any degree <= horizon / r.
inline OrbitSpectrum restrict(const OrbitSpectrum& s, std::size_t r)
{
    if (r == 0)
        throw Error(ErrorKind::BadParameters, "restrict needs r >= 1");
    if (r == 1)
        return s;
    const std::size_t new_horizon = s.complete ? s.horizon : s.horizon / r;
    std::vector<BigInt> b(new_horizon);
    for (std::size_t m = 1; m <= s.horizon; ++m) {
        const BigInt& count = s.counts[m - 1];
        if (count == 0)
            continue;
        const std::size_t g = std::gcd(m, r);
        const std::size_t target = m / g;
        if (target <= new_horizon)
            b[target - 1] += BigInt(static_cast<unsigned long long>(g)) * count;
    }
    return OrbitSpectrum(ipow(s.base_q, r), std::move(b), s.complete);
}

inline OrbitSpectrum disjoint_union(const OrbitSpectrum& a, const OrbitSpectrum& b)
{
    if (a.base_q != b.base_q)
        throw Error(ErrorKind::BaseMismatch, "disjoint_union over q=" + a.base_q.str() + " and q=" + b.base_q.str());
    std::size_t h;
    if (a.complete && b.complete)
        h = std::max(a.horizon, b.horizon);
    else if (a.complete)
        h = b.horizon;
    else if (b.complete)
        h = a.horizon;
    else
        h = std::min(a.horizon, b.horizon);
    std::vector<BigInt> c(h);
    for (std::size_t k = 1; k <= h; ++k)
        c[k - 1] = a.count(k) + b.count(k);
    return OrbitSpectrum(a.base_q, std::move(c), a.complete && b.complete);
}

enum class Faithfulness { Faithful, NotFaithful, Unknown };

inline std::string to_string(Faithfulness f)
{
    switch (f) {
    case Faithfulness::Faithful: return "Faithful";
    case Faithfulness::NotFaithful: return "NotFaithful";
    case Faithfulness::Unknown: return "Unknown";
    }
    return "Unknown";
}

/// A locally finite module is faithful iff it is infinite. A complete spectrum
/// describes a finite set; a truncation can never certify infinitude.
inline Faithfulness is_faithful(const OrbitSpectrum& s)
{
    return s.complete ? Faithfulness::NotFaithful : Faithfulness::Unknown;
}

inline bool spectra_equal(const OrbitSpectrum& a, const OrbitSpectrum& b, std::size_t bound)
{
    if (!a.covers(bound) || !b.covers(bound))
        throw Error(ErrorKind::HorizonExceeded, "spectra_equal bound " + std::to_string(bound) + " exceeds a horizon");
    if (a.base_q != b.base_q)
        return false;
    for (std::size_t k = 1; k <= bound; ++k)
        if (a.count(k) != b.count(k))
            return false;
    return true;
}

} // namespace zetamod
