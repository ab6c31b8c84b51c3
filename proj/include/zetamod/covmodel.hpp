#pragma once

// Finite models of module truncations: a permutation phi standing for the
// generator of the Galois group, a finite abelian-or-not group H of
// permutations commuting with it, quotients N -> N/H, inertia indices,
// twisted actions, Galois-closure towers and the fixed-point identity
// sum_h |Fix(h phi^r)| = |H| |Fix(phi'^r)|.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "exactcore.hpp"
#include "rha.hpp"
#include "spectrum.hpp"
#include "zetafn.hpp"

namespace zetamod {

/// Image list: p[x] is the image of x.
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kMaxModelPoints = 10000;

inline bool is_permutation(const Permutation& p)
{
    std::vector<bool> seen(p.size(), false);
    for (std::size_t x : p) {
        if (x >= p.size() || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

inline Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

/// (a o b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation c(b.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        c[x] = a[b[x]];
    return c;
}

inline Permutation inverse(const Permutation& p)
{
    Permutation inv(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        inv[p[x]] = x;
    return inv;
}

inline Permutation permutation_power(const Permutation& p, std::size_t n)
{
    // cycle-wise, so large n costs nothing extra
    Permutation out(p.size());
    std::vector<bool> done(p.size(), false);
    std::vector<std::size_t> cycle;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (done[start])
            continue;
        cycle.clear();
        for (std::size_t x = start; !done[x]; x = p[x]) {
            done[x] = true;
            cycle.push_back(x);
        }
        const std::size_t len = cycle.size();
        for (std::size_t i = 0; i < len; ++i)
            out[cycle[i]] = cycle[(i + n) % len];
    }
    return out;
}

/// cycle_length[x] = size of the cycle through x.
inline std::vector<std::size_t> cycle_lengths(const Permutation& p)
{
    std::vector<std::size_t> len(p.size(), 0);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (len[start] != 0)
            continue;
        std::size_t n = 1;
        for (std::size_t x = p[start]; x != start; x = p[x])
            ++n;
        for (std::size_t x = start, i = 0; i < n; x = p[x], ++i)
            len[x] = n;
    }
    return len;
}

inline std::size_t permutation_order(const Permutation& p)
{
    std::size_t order = 1;
    for (std::size_t len : cycle_lengths(p))
        order = std::lcm(order, len);
    return order;
}

inline std::size_t fixed_point_count(const Permutation& p)
{
    std::size_t n = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] == x)
            ++n;
    return n;
}

inline bool commutes(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

/// A finite union of orbits: points 0..n-1 and the generator action phi.
class FiniteOrbitModel {
public:
    FiniteOrbitModel() = default;

    explicit FiniteOrbitModel(Permutation phi) : phi_(std::move(phi))
    {
        if (phi_.size() > kMaxModelPoints)
            throw Error(ErrorKind::BadParameters, "models are capped at " + std::to_string(kMaxModelPoints) + " points");
        if (!is_permutation(phi_))
            throw Error(ErrorKind::InvalidPermutation, "phi is not a bijection of 0..n-1");
        degrees_ = cycle_lengths(phi_);
    }

    std::size_t size() const noexcept { return phi_.size(); }
    const Permutation& phi() const noexcept { return phi_; }
    /// delta(x): the length of the phi-orbit through x.
    std::size_t degree(std::size_t x) const { return degrees_.at(x); }
    const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

    friend bool operator==(const FiniteOrbitModel& a, const FiniteOrbitModel& b) { return a.phi_ == b.phi_; }

private:
    Permutation phi_;
    std::vector<std::size_t> degrees_;
};

/// Cycle-length histogram of phi as a complete spectrum over base q.
inline OrbitSpectrum orbit_spectrum_of(const FiniteOrbitModel& m, const BigInt& base_q)
{
    std::size_t longest = 0;
    for (std::size_t d : m.degrees())
        longest = std::max(longest, d);
    std::vector<BigInt> b(longest);
    for (std::size_t d : m.degrees())
        b[d - 1] += 1;
    for (std::size_t k = 1; k <= longest; ++k)
        b[k - 1] /= static_cast<unsigned long long>(k);
    return OrbitSpectrum(base_q, std::move(b), true);
}

/// A finite group H of permutations commuting with phi, with its full
/// element list and per-point stabilizer sizes.
class GroupAction {
public:
    GroupAction(FiniteOrbitModel model, std::vector<Permutation> generators)
        : model_(std::move(model)), generators_(std::move(generators))
    {
        const std::size_t n = model_.size();
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto& g = generators_[i];
            if (g.size() != n || !is_permutation(g))
                throw Error(ErrorKind::InvalidPermutation, "generator " + std::to_string(i) + " is not a permutation");
            if (!commutes(g, model_.phi()))
                throw Error(ErrorKind::NotCommuting, "generator " + std::to_string(i) + " does not commute with phi");
        }
        close();
        stabilizers_.assign(n, 0);
        for (const auto& h : elements_)
            for (std::size_t x = 0; x < n; ++x)
                if (h[x] == x)
                    ++stabilizers_[x];
    }

    const FiniteOrbitModel& model() const noexcept { return model_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    /// Identity first, then breadth-first in the generators.
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    /// |Stab_H(x)|.
    std::size_t stabilizer_size(std::size_t x) const { return stabilizers_.at(x); }

    std::vector<std::size_t> points_with_nontrivial_stabilizer() const
    {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < stabilizers_.size(); ++x)
            if (stabilizers_[x] > 1)
                out.push_back(x);
        return out;
    }

    bool contains(const Permutation& p) const { return members_.count(p) > 0; }

    /// orbit_label[x] = index of Orb_H(x), numbered by smallest member.
    std::vector<std::size_t> orbit_labels() const
    {
        const std::size_t n = model_.size();
        std::vector<std::size_t> rep(n);
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t best = x;
            for (const auto& h : elements_)
                best = std::min(best, h[x]);
            rep[x] = best;
        }
        std::vector<std::size_t> label(n), index(n, n);
        std::size_t next = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (index[rep[x]] == n)
                index[rep[x]] = next++;
            label[x] = index[rep[x]];
        }
        return label;
    }

private:
    void close()
    {
        const Permutation id = identity_permutation(model_.size());
        elements_.push_back(id);
        members_.insert(id);
        // the group is finite, so closing under composition yields inverses too
        for (std::size_t i = 0; i < elements_.size(); ++i)
            for (const auto& g : generators_) {
                Permutation next = compose(g, elements_[i]);
                if (members_.insert(next).second)
                    elements_.push_back(std::move(next));
            }
    }

    FiniteOrbitModel model_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::set<Permutation> members_;
    std::vector<std::size_t> stabilizers_;
};

struct QuotientModel {
    FiniteOrbitModel model;
    std::vector<std::size_t> projection; // xi_H
};

/// N/H with phi'(Orb_H(x)) = Orb_H(phi x). Well-definedness is checked
/// exhaustively rather than inferred from commutation.
inline QuotientModel quotient(const GroupAction& a)
{
    const std::vector<std::size_t> label = a.orbit_labels();
    const auto& phi = a.model().phi();
    std::size_t count = 0;
    for (std::size_t l : label)
        count = std::max(count, l + 1);
    const std::size_t unset = count;
    Permutation induced(count, unset);
    for (std::size_t x = 0; x < phi.size(); ++x) {
        const std::size_t src = label[x], dst = label[phi[x]];
        if (induced[src] == unset)
            induced[src] = dst;
        else if (induced[src] != dst)
            throw Error(ErrorKind::NotCommuting, "phi does not descend to the orbit space");
    }
    return {FiniteOrbitModel(std::move(induced)), label};
}

struct CoveringStats {
    std::size_t degree = 0;                      // max fibre size
    std::vector<std::size_t> inertia;            // e(y) per source point
    std::vector<std::size_t> fibre_sizes;        // per target point
    std::vector<std::size_t> exceptional_fibres; // target points with fibre size < degree
    bool fibre_decomposition_ok = false;
};

/// Degree, inertia e(y) = delta(y) / delta(xi(y)) and the decomposition of
/// each fibre over x into phi^{delta(x)}-orbits of size e(y).
inline CoveringStats covering_stats(const std::vector<std::size_t>& xi, const FiniteOrbitModel& source,
                                    const FiniteOrbitModel& target)
{
    const std::size_t n = source.size();
    if (xi.size() != n)
        throw Error(ErrorKind::BadParameters, "projection has the wrong number of points");
    for (std::size_t y = 0; y < n; ++y) {
        if (xi[y] >= target.size())
            throw Error(ErrorKind::BadParameters, "projection leaves the target");
        if (xi[source.phi()[y]] != target.phi()[xi[y]])
            throw Error(ErrorKind::NotEquivariant, "xi(phi y) != phi(xi y) at y = " + std::to_string(y));
    }
    CoveringStats st;
    st.fibre_sizes.assign(target.size(), 0);
    for (std::size_t y = 0; y < n; ++y)
        ++st.fibre_sizes[xi[y]];
    for (std::size_t x = 0; x < target.size(); ++x)
        if (st.fibre_sizes[x] == 0)
            throw Error(ErrorKind::NotSurjective, "empty fibre over x = " + std::to_string(x));
    st.degree = *std::max_element(st.fibre_sizes.begin(), st.fibre_sizes.end());
    for (std::size_t x = 0; x < target.size(); ++x)
        if (st.fibre_sizes[x] < st.degree)
            st.exceptional_fibres.push_back(x);

    st.inertia.resize(n);
    for (std::size_t y = 0; y < n; ++y)
        st.inertia[y] = source.degree(y) / target.degree(xi[y]);

    // phi^{delta(x)} preserves the fibre over x; walk its cycles there
    st.fibre_decomposition_ok = true;
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> covered(target.size(), 0);
    for (std::size_t y = 0; y < n; ++y) {
        if (visited[y])
            continue;
        const std::size_t x = xi[y];
        const std::size_t step = target.degree(x);
        if (source.degree(y) % step != 0)
            st.fibre_decomposition_ok = false;
        std::size_t len = 0;
        std::size_t z = y;
        do {
            visited[z] = true;
            ++len;
            for (std::size_t i = 0; i < step; ++i)
                z = source.phi()[z];
            if (xi[z] != x)
                st.fibre_decomposition_ok = false;
        } while (z != y && xi[z] == x);
        if (len != st.inertia[y])
            st.fibre_decomposition_ok = false;
        covered[x] += len;
    }
    if (covered != st.fibre_sizes)
        st.fibre_decomposition_ok = false;
    return st;
}

/// Properties of xi_H : N -> N/H that hold for every H-Galois cover.
struct GaloisCoverReport {
    QuotientModel quotient;
    CoveringStats stats;
    bool inertia_fibre_constant = false;
    bool inertia_divides_order = false;
    bool pullback_orbits_ok = false; // free fibres split into |H|/e orbits of degree delta(x) e

    bool pass() const
    {
        return stats.fibre_decomposition_ok && inertia_fibre_constant && inertia_divides_order && pullback_orbits_ok;
    }
};

inline GaloisCoverReport galois_cover_check(const GroupAction& a)
{
    GaloisCoverReport rep;
    rep.quotient = quotient(a);
    const auto& xi = rep.quotient.projection;
    const auto& src = a.model();
    const auto& tgt = rep.quotient.model;
    rep.stats = covering_stats(xi, src, tgt);
    const std::size_t h = a.order();

    std::vector<std::size_t> fibre_e(tgt.size(), 0);
    rep.inertia_fibre_constant = true;
    rep.inertia_divides_order = true;
    for (std::size_t y = 0; y < src.size(); ++y) {
        const std::size_t e = rep.stats.inertia[y];
        if (fibre_e[xi[y]] == 0)
            fibre_e[xi[y]] = e;
        else if (fibre_e[xi[y]] != e)
            rep.inertia_fibre_constant = false;
        if (h % e != 0)
            rep.inertia_divides_order = false;
    }

    // count phi-orbits in the preimage of each quotient orbit
    rep.pullback_orbits_ok = true;
    std::vector<bool> seen(src.size(), false);
    std::vector<std::size_t> orbits_over(tgt.size(), 0);
    std::vector<std::size_t> orbit_rep_target(tgt.size());
    {
        // label each target point by the smallest point of its phi'-orbit
        for (std::size_t x = 0; x < tgt.size(); ++x) {
            std::size_t best = x;
            for (std::size_t z = tgt.phi()[x]; z != x; z = tgt.phi()[z])
                best = std::min(best, z);
            orbit_rep_target[x] = best;
        }
    }
    for (std::size_t y = 0; y < src.size(); ++y) {
        if (seen[y])
            continue;
        for (std::size_t z = y; !seen[z]; z = src.phi()[z])
            seen[z] = true;
        ++orbits_over[orbit_rep_target[xi[y]]];
        if (src.degree(y) != tgt.degree(xi[y]) * rep.stats.inertia[y])
            rep.pullback_orbits_ok = false;
    }
    for (std::size_t x = 0; x < tgt.size(); ++x) {
        if (orbit_rep_target[x] != x || rep.stats.fibre_sizes[x] != h)
            continue;
        if (orbits_over[x] * fibre_e[x] != h)
            rep.pullback_orbits_ok = false;
    }
    return rep;
}

struct BurnsideRow {
    std::size_t r = 0;
    std::size_t lhs = 0;                // sum_h |Fix(h o phi^r)|
    std::size_t rhs = 0;                // |H| |Fix(phi'^r)|
    bool stabilizer_count_ok = false;   // #{h : h phi^r y = y} = |Stab_H(y)| over fixed fibres, 0 elsewhere
    bool pass() const { return lhs == rhs && stabilizer_count_ok; }
};

/// Exact check of sum_{h in H} |Fix(h o phi^r)| = |H| |Fix(phi'^r)| for one r.
inline BurnsideRow burnside_identity_check(const GroupAction& a, std::size_t r)
{
    if (r < 1)
        throw Error(ErrorKind::BadParameters, "burnside_identity_check needs r >= 1");
    const QuotientModel q = quotient(a);
    const std::size_t n = a.model().size();
    const Permutation phir = permutation_power(a.model().phi(), r);
    const Permutation phir_q = permutation_power(q.model.phi(), r);

    BurnsideRow row;
    row.r = r;
    std::vector<std::size_t> nu(n, 0);
    for (const auto& h : a.elements())
        for (std::size_t y = 0; y < n; ++y)
            if (h[phir[y]] == y) {
                ++row.lhs;
                ++nu[y];
            }
    row.rhs = a.order() * fixed_point_count(phir_q);
    row.stabilizer_count_ok = true;
    for (std::size_t y = 0; y < n; ++y) {
        const bool over_fixed = phir_q[q.projection[y]] == q.projection[y];
        const std::size_t expected = over_fixed ? a.stabilizer_size(y) : 0;
        if (nu[y] != expected)
            row.stabilizer_count_ok = false;
    }
    return row;
}

inline std::vector<BurnsideRow> burnside_rows(const GroupAction& a, std::size_t r_max)
{
    std::vector<BurnsideRow> rows;
    for (std::size_t r = 1; r <= r_max; ++r)
        rows.push_back(burnside_identity_check(a, r));
    return rows;
}

/// phi' = h o phi^n.
inline FiniteOrbitModel twist(const FiniteOrbitModel& m, const Permutation& h, std::size_t n)
{
    if (n < 1)
        throw Error(ErrorKind::BadParameters, "twist needs n >= 1");
    if (h.size() != m.size() || !is_permutation(h))
        throw Error(ErrorKind::InvalidPermutation, "twisting element is not a permutation of the model");
    if (!commutes(h, m.phi()))
        throw Error(ErrorKind::NotCommuting, "twisting element does not commute with phi");
    return FiniteOrbitModel(compose(h, permutation_power(m.phi(), n)));
}

/// Every twisted orbit degree divides ord(h) * n * (original degree).
inline bool twist_degree_law_holds(const FiniteOrbitModel& original, const Permutation& h, std::size_t n,
                                   const FiniteOrbitModel& twisted)
{
    const std::size_t order = permutation_order(h);
    for (std::size_t y = 0; y < original.size(); ++y)
        if ((order * n * original.degree(y)) % twisted.degree(y) != 0)
            return false;
    return true;
}

struct GaloisClosureReport {
    std::size_t order_h = 0;
    std::size_t order_h1 = 0;
    std::size_t index = 0; // |H| / |H1|
    QuotientModel m;       // N / H1
    QuotientModel l;       // N / H
    std::vector<std::size_t> xi; // M -> L
    CoveringStats xi_stats;
    bool diagram_commutes = false;

    bool pass() const { return diagram_commutes && xi_stats.fibre_decomposition_ok; }
};

/// Builds M = N/H1 and L = N/H, the induced xi : M -> L, and checks
/// xi o xi_{H1} = xi_H together with the covering properties of xi.
inline GaloisClosureReport galois_closure_check(const GroupAction& h, const std::vector<Permutation>& h1_generators)
{
    for (std::size_t i = 0; i < h1_generators.size(); ++i)
        if (!h.contains(h1_generators[i]))
            throw Error(ErrorKind::NotSubgroup, "subgroup generator " + std::to_string(i) + " is not an element of H");
    const GroupAction h1(h.model(), h1_generators);
    GaloisClosureReport rep;
    rep.order_h = h.order();
    rep.order_h1 = h1.order();
    rep.index = rep.order_h / rep.order_h1;
    rep.m = quotient(h1);
    rep.l = quotient(h);

    const std::size_t unset = rep.l.model.size();
    rep.xi.assign(rep.m.model.size(), unset);
    rep.diagram_commutes = true;
    for (std::size_t z = 0; z < h.model().size(); ++z) {
        std::size_t& slot = rep.xi[rep.m.projection[z]];
        if (slot == unset)
            slot = rep.l.projection[z];
        else if (slot != rep.l.projection[z])
            rep.diagram_commutes = false;
    }
    for (std::size_t z = 0; z < h.model().size(); ++z)
        if (rep.xi[rep.m.projection[z]] != rep.l.projection[z])
            rep.diagram_commutes = false;
    rep.xi_stats = covering_stats(rep.xi, rep.m.model, rep.l.model);
    return rep;
}

// ---------------------------------------------------------------------------
// Twist experiment on spectra

struct TwistExperiment {
    std::size_t h_order = 1;
    std::size_t n = 1;
    QuotientPoly original;
    QuotientPoly twisted; // over base q^{mn}
    RhaReport original_report;
    RhaReport twisted_report;
    bool verdicts_match = false;
    bool lambda_pair_ok = false; // |a'_{d'}|^d == |a_d|^{d' m n}

    bool pass() const { return verdicts_match && lambda_pair_ok; }
};

/// The twist by h of order m and phi^n is governed by phi^{mn}: N'_r = N(mnr)
/// over base q^{mn}. Quotients are detected from fixed-point data on both
/// sides; r_max is the twisted truncation order.
inline TwistExperiment rha_twist_experiment(const OrbitSpectrum& spectrum, std::size_t h_order, std::size_t n,
                                            std::size_t r_max, double tol = 1e-9)
{
    if (h_order < 1 || n < 1 || r_max < 1)
        throw Error(ErrorKind::BadParameters, "twist experiment needs m, n, r_max >= 1");
    const std::size_t step = h_order * n;
    const std::size_t needed = step * r_max;
    if (!spectrum.covers(needed))
        throw Error(ErrorKind::HorizonExceeded, "twist experiment needs the spectrum up to degree " + std::to_string(needed));

    auto detect = [](const FixedPointTable& t, std::size_t order) {
        const ZetaContext ctx(t.base_q, order);
        const TruncSeries p = zeta_quotient(zeta_exp(t, ctx), ctx);
        const auto found = detect_polynomial(p, t.base_q, default_tail(order));
        if (!found)
            throw Error(ErrorKind::InsufficientData,
                        "no polynomial quotient detected to order " + std::to_string(order) + " over q = " + t.base_q.str());
        return *found;
    };

    const std::size_t own_order = spectrum.complete ? needed : std::min(spectrum.horizon, needed);
    const FixedPointTable base = fixed_points(spectrum, needed);
    FixedPointTable own = base;
    own.values.resize(own_order);
    FixedPointTable twisted;
    twisted.base_q = ipow(spectrum.base_q, step);
    for (std::size_t r = 1; r <= r_max; ++r)
        twisted.values.push_back(base.at(step * r));

    TwistExperiment ex;
    ex.h_order = h_order;
    ex.n = n;
    ex.original = detect(own, own_order);
    ex.twisted = detect(twisted, r_max);
    ex.original_report = rha_check(ex.original, tol);
    ex.twisted_report = rha_check(ex.twisted, tol);
    ex.verdicts_match = ex.original_report.verdict == ex.twisted_report.verdict;
    ex.lambda_pair_ok = ipow(ex.twisted.abs_leading(), ex.original.degree()) ==
                        ipow(ex.original.abs_leading(), ex.twisted.degree() * step);
    return ex;
}

// ---------------------------------------------------------------------------
// Constructed models

namespace detail {

/// Z_{n_1} x ... x Z_{n_k}, elements indexed in mixed radix.
struct AbelianGroup {
    std::vector<std::size_t> moduli;

    std::size_t order() const
    {
        std::size_t n = 1;
        for (std::size_t m : moduli)
            n *= m;
        return n;
    }

    std::size_t add(std::size_t a, std::size_t b) const
    {
        std::size_t out = 0, scale = 1;
        for (std::size_t m : moduli) {
            out += ((a % m + b % m) % m) * scale;
            a /= m;
            b /= m;
            scale *= m;
        }
        return out;
    }

    /// The standard generators (one per cyclic factor).
    std::vector<std::size_t> basis() const
    {
        std::vector<std::size_t> out;
        std::size_t scale = 1;
        for (std::size_t m : moduli) {
            out.push_back(scale);
            scale *= m;
        }
        return out;
    }
};

} // namespace detail

/// The abelian groups of order <= 8 used by the generator.
inline std::vector<std::vector<std::size_t>> small_abelian_groups()
{
    return {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {2, 2, 2}};
}

/// A commuting pair (phi, H) built from blocks (H/K) x Z_c: H translates the
/// coset coordinate, phi steps the cyclic coordinate and, on wrapping around,
/// translates the coset by a fixed g in H. Abelian H makes the two commute by
/// construction; K is the stabilizer of every point of the block.
inline GroupAction random_commuting_model(std::mt19937& rng, std::size_t max_points = 512)
{
    const auto groups = small_abelian_groups();
    const detail::AbelianGroup grp{groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)]};
    const std::size_t order = grp.order();
    std::uniform_int_distribution<std::size_t> pick_element(0, order - 1);
    std::uniform_int_distribution<std::size_t> pick_cycle(1, 6);
    std::uniform_int_distribution<std::size_t> pick_blocks(1, 6);

    Permutation phi;
    std::vector<Permutation> generators(grp.basis().size());
    const auto basis = grp.basis();
    std::vector<std::vector<std::size_t>> gen_images(basis.size());

    const std::size_t blocks = pick_blocks(rng);
    for (std::size_t b = 0; b < blocks; ++b) {
        // K = <k>; cosets labelled by their smallest member
        const std::size_t k = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? pick_element(rng) : 0;
        std::vector<std::size_t> coset_of(order);
        std::vector<std::size_t> reps;
        std::map<std::size_t, std::size_t> rep_index;
        for (std::size_t x = 0; x < order; ++x) {
            std::size_t best = x;
            for (std::size_t y = grp.add(x, k); y != x; y = grp.add(y, k))
                best = std::min(best, y);
            if (!rep_index.count(best)) {
                rep_index[best] = reps.size();
                reps.push_back(best);
            }
            coset_of[x] = rep_index[best];
        }
        const std::size_t c = pick_cycle(rng);
        const std::size_t cosets = reps.size();
        if (phi.size() + cosets * c > max_points)
            break;
        const std::size_t g = pick_element(rng);
        const std::size_t offset = phi.size();
        auto point = [&](std::size_t coset, std::size_t i) { return offset + coset * c + i; };
        phi.resize(offset + cosets * c);
        for (auto& img : gen_images)
            img.resize(offset + cosets * c);
        for (std::size_t s = 0; s < cosets; ++s)
            for (std::size_t i = 0; i < c; ++i) {
                phi[point(s, i)] = i + 1 < c ? point(s, i + 1) : point(coset_of[grp.add(reps[s], g)], 0);
                for (std::size_t j = 0; j < basis.size(); ++j)
                    gen_images[j][point(s, i)] = point(coset_of[grp.add(reps[s], basis[j])], i);
            }
    }
    if (phi.empty()) {
        phi = {0};
        for (auto& img : gen_images)
            img = {0};
    }
    for (std::size_t j = 0; j < basis.size(); ++j)
        generators[j] = gen_images[j];
    return GroupAction(FiniteOrbitModel(std::move(phi)), std::move(generators));
}

/// Points Z_4 x Z_2 (index 2a + b), phi = +(1, 0), H = <(2,0), (0,1)> acting
/// freely by translation, H1 = <(2,0)>.
struct Klein8Model {
    GroupAction action;
    std::vector<Permutation> subgroup_generators;
};

inline Klein8Model klein8_model()
{
    auto idx = [](std::size_t a, std::size_t b) { return 2 * (a % 4) + (b % 2); };
    Permutation phi(8), t20(8), t01(8);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            phi[idx(a, b)] = idx(a + 1, b);
            t20[idx(a, b)] = idx(a + 2, b);
            t01[idx(a, b)] = idx(a, b + 1);
        }
    return {GroupAction(FiniteOrbitModel(phi), {t20, t01}), {t20}};
}

} // namespace zetamod
