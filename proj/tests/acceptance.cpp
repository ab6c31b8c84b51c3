// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zetamod/cli.hpp"
#include "zetamod/zetamod.hpp"

using namespace zetamod;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string data(const std::string& name) { return std::string(ZETAMOD_DATA_DIR) + "/" + name; }

std::vector<std::string> corpus_curves()
{
    return {"ell4.curve",  "ell5.curve",     "ell5b.curve",    "ell7a.curve",     "ell7b.curve", "ell7c.curve",
            "ell7d.curve", "klein_f2.curve", "klein_f3.curve", "fermat4_f3.curve", "conic_f3.curve"};
}

CurveModel load_curve(const std::string& name) { return std::get<CurveModel>(load_document(data(name)).value); }

OrbitSpectrum random_spectrum(std::mt19937& rng, const BigInt& q, std::size_t max_degree, int max_count)
{
    std::vector<BigInt> b(max_degree);
    for (auto& x : b)
        x = std::uniform_int_distribution<int>(0, max_count)(rng);
    return OrbitSpectrum(q, std::move(b), true);
}

QuotientPoly detect_from(const FixedPointTable& t, std::size_t order)
{
    const ZetaContext ctx(t.base_q, order);
    const auto p = detect_polynomial(zeta_quotient(zeta_exp(t, ctx), ctx), t.base_q, default_tail(order));
    if (!p)
        throw Error(ErrorKind::InsufficientData, "no polynomial quotient at order " + std::to_string(order));
    return *p;
}

// 1
Outcome three_way_agreement()
{
    Outcome o;
    std::mt19937 rng(1001);
    const std::size_t d = 12;
    for (int trial = 0; trial < 200; ++trial) {
        const BigInt q = std::vector<long long>{2, 3, 4, 5}[trial % 4];
        const OrbitSpectrum s = random_spectrum(rng, q, 8, 5);
        const ZetaContext ctx(q, d);
        const TruncSeries e = zeta_euler(s, ctx);
        o.require(e == zeta_exp(fixed_points(s, d), ctx), "euler != exp at trial " + std::to_string(trial));
        o.require(e == divisor_count_series(divisor_counts_bruteforce(s, d)),
                  "euler != divisor counts at trial " + std::to_string(trial));
    }
    o.detail = o.pass ? "200 spectra, D = 12" : o.detail;
    return o;
}

// 2
Outcome projective_line()
{
    Outcome o;
    for (long long qi : {2, 3, 4, 5}) {
        const BigInt q(qi);
        const std::size_t d = 10;
        const OrbitSpectrum s = projective_line_spectrum(q, d);
        const ZetaContext ctx(q, d);
        o.require(zeta_quotient(zeta_euler(s, ctx), ctx) == TruncSeries::one(d), "quotient != 1 for q = " + q.str());
        const DivisorCountTable a = divisor_counts_bruteforce(s, d);
        for (std::size_t m = 0; m <= d; ++m)
            o.require(a.at(m) == (ipow(q, m + 1) - 1) / (q - 1), "A_" + std::to_string(m) + " wrong for q = " + q.str());
    }
    o.detail = o.pass ? "q in {2,3,4,5}, m <= 10" : o.detail;
    return o;
}

// 3
Outcome hasse_weil()
{
    Outcome o;
    o.require(oracle::short_weierstrass_count_fp(1, 1, 5) == 9, "oracle N_1 != 9");
    o.require(oracle::short_weierstrass_count_fp2(1, 1, 5) == 27, "oracle N_2 != 27");
    const CurveModel ell5 = load_curve("ell5.curve");
    o.require(count_points(ell5, 1) == 9 && count_points(ell5, 2) == 27, "enumeration disagrees with oracle");
    int curves = 0;
    for (const char* name : {"ell5.curve", "ell5b.curve", "ell7a.curve", "ell7b.curve", "ell7c.curve", "ell7d.curve"}) {
        const CurveModel c = load_curve(name);
        o.require(c.kind() == CurveKind::Weierstrass, std::string(name) + " is not Weierstrass");
        const CurveZetaData z = curve_zeta(c);
        const IntPoly& w = z.weil_poly;
        const BigInt q(c.field().order());
        o.require(w.degree() == 2, std::string(name) + " weil polynomial not of degree 2");
        o.require(w.coeff(2) == q * w.coeff(0), std::string(name) + " a_2 != q a_0");
        const RhaReport rep = rha_check(z.quotient(), 1e-9);
        o.require(rep.verdict == Verdict::Holds, std::string(name) + " rha not Holds");
        const double root_q = std::sqrt(static_cast<double>(c.field().order()));
        for (double m : rep.root_magnitudes)
            o.require(std::fabs(m - root_q) <= 1e-9 * root_q, std::string(name) + " |w| != sqrt q");
        ++curves;
    }
    o.detail = o.pass ? std::to_string(curves) + " curves over F_5 and F_7" : o.detail;
    return o;
}

// 4
Outcome predict_verify()
{
    Outcome o;
    for (const auto& name : corpus_curves()) {
        const CurveModel c = load_curve(name);
        const CurveZetaData z = curve_zeta(c);
        const std::size_t g = c.genus();
        std::vector<std::size_t> rs{3, 4};
        if (2 * g + 1 > 4)
            rs.insert(rs.end(), {2 * g + 1, 2 * g + 2});
        const FixedPointTable predicted = predicted_fixed_points(z.quotient(), rs.back());
        for (std::size_t r : rs) {
            const BigInt counted = r <= z.counts.size() ? z.counts.at(r) : count_points(c, r);
            o.require(predicted.at(r) == counted, name + " N_" + std::to_string(r) + " mismatch");
        }
    }
    o.detail = o.pass ? std::to_string(corpus_curves().size()) + " curves, N_3, N_4 and N_{2g+1}, N_{2g+2}" : o.detail;
    return o;
}

// 5
Outcome nonprojective()
{
    Outcome o;
    for (std::size_t d = 1; d <= 3; ++d) {
        const std::size_t order = 16;
        const OrbitSpectrum s = nonprojective_module(BigInt(2), 3, d, order);
        const QuotientPoly p = detect_from(fixed_points(s, order), order);
        IntPoly expected{1};
        for (std::size_t i = 0; i < d; ++i)
            expected = expected * IntPoly{1, -2};
        const std::string tag = "d = " + std::to_string(d);
        o.require(p.q == 8, tag + " base != 8");
        o.require(p.poly == expected, tag + " quotient " + p.poly.str());
        o.require(rha_check(p).verdict == Verdict::Holds, tag + " rha not Holds");
        o.require(p.lambda_equals(1, 3), tag + " lambda != 1/3");
        o.require(functional_equation_check(p).all_pass(), tag + " functional equation");
    }
    o.detail = o.pass ? "q = 2, m = 3, d = 1..3" : o.detail;
    return o;
}

// 6
Outcome restriction()
{
    Outcome o;
    std::mt19937 rng(1006);
    const std::size_t horizon = 48;
    int built = 0;
    while (built < 50) {
        const long long q = std::vector<long long>{2, 3, 4, 5, 7}[std::uniform_int_distribution<int>(0, 4)(rng)];
        const std::size_t g = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        const long long bound = static_cast<long long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
        IntPoly p{1};
        for (std::size_t i = 0; i < g; ++i)
            p = p * IntPoly{1, std::uniform_int_distribution<long long>(-bound, bound)(rng), q};
        const QuotientPoly quotient(p, BigInt(q));
        OrbitSpectrum s;
        try {
            s = spectrum_from_fixed_points(predicted_fixed_points(quotient, horizon));
        } catch (const Error&) {
            continue; // negative orbit count: not the points of any module
        }
        ++built;
        for (std::size_t r : {2, 3, 4}) {
            const OrbitSpectrum rs = restrict(s, r);
            const std::size_t d = rs.horizon;
            const ZetaContext ctx(rs.base_q, d);
            const auto found = detect_polynomial(zeta_quotient(zeta_euler(rs, ctx), ctx), rs.base_q, default_tail(d));
            o.require(found && found->poly == power_map(p, r) && found->q == ipow(BigInt(q), r),
                      "restricted quotient of " + p.str() + " by r = " + std::to_string(r));
            const FixedPointTable down = fixed_points(rs, 4), up = fixed_points(s, 4 * r);
            for (std::size_t k = 1; k <= 4; ++k)
                o.require(down.at(k) == up.at(r * k), "fixed points after restriction by " + std::to_string(r));
        }
    }
    o.detail = o.pass ? "50 spectra, r in {2,3,4}" : o.detail;
    return o;
}

// 7
Outcome burnside()
{
    Outcome o;
    std::mt19937 rng(1007);
    for (int trial = 0; trial < 100; ++trial) {
        const GroupAction a = random_commuting_model(rng);
        const std::string tag = "model " + std::to_string(trial);
        o.require(a.model().size() <= 512 && a.order() <= 8, tag + " outside size limits");
        for (const auto& row : burnside_rows(a, 12))
            o.require(row.pass(), tag + " r = " + std::to_string(row.r));
        const GaloisCoverReport rep = galois_cover_check(a);
        o.require(rep.inertia_fibre_constant, tag + " inertia not fibre-constant");
        o.require(rep.inertia_divides_order, tag + " inertia does not divide |H|");
        o.require(rep.stats.fibre_decomposition_ok, tag + " fibre decomposition");
    }
    o.detail = o.pass ? "100 models, r <= 12" : o.detail;
    return o;
}

// 8
struct CorpusEntry {
    std::string name;
    QuotientPoly quotient;
    FixedPointTable fixed;
};

FixedPointTable difference_of_powers(long long a, long long b, long long q, std::size_t count)
{
    FixedPointTable t;
    t.base_q = q;
    for (std::size_t r = 1; r <= count; ++r)
        t.values.push_back(ipow(BigInt(a), r) - ipow(BigInt(b), r));
    return t;
}

Outcome bound_equivalence()
{
    Outcome o;
    std::vector<CorpusEntry> corpus;
    int skipped = 0;
    for (const auto& entry : fs::directory_iterator(ZETAMOD_DATA_DIR)) {
        const std::string name = entry.path().filename().string();
        try {
            const cli::RhaInput in = cli::rha_input(load_document(entry.path().string()), std::nullopt, std::nullopt,
                                                    kDefaultPointBudget);
            if (!in.quotient) {
                ++skipped;
                continue;
            }
            corpus.push_back({name, *in.quotient, in.fixed});
        } catch (const Error&) {
            ++skipped; // singular curves are rejected before any verdict
        }
    }
    corpus.push_back({"4^r - 2^r", detect_from(difference_of_powers(4, 2, 4, 12), 12), difference_of_powers(4, 2, 4, 6)});
    corpus.push_back({"9^r - 3^r", detect_from(difference_of_powers(9, 3, 9, 12), 12), difference_of_powers(9, 3, 9, 6)});

    int holds = 0, fails = 0;
    for (auto& e : corpus) {
        if (e.fixed.size() > 6)
            e.fixed.values.resize(6);
        const bool verdict = rha_check(e.quotient).verdict == Verdict::Holds;
        const bool bounds = rha_bounds_check(e.fixed, e.quotient).all_pass();
        o.require(verdict == bounds, e.name + ": verdict and bounds disagree");
        (verdict ? holds : fails) += 1;
    }
    o.require(holds > 0 && fails > 0, "only one direction observed");
    o.detail = o.pass ? std::to_string(holds) + " Holds, " + std::to_string(fails) + " Fails, " +
                            std::to_string(skipped) + " without a quotient"
                      : o.detail;
    return o;
}

// 9
Outcome order_estimate()
{
    Outcome o;
    double worst = 0;
    for (const auto& name : corpus_curves()) {
        const CurveModel c = load_curve(name);
        if (c.genus() != 1)
            continue;
        const CurveZetaData z = curve_zeta(c);
        FixedPointTable cover = predicted_fixed_points(z.quotient(), 6);
        for (std::size_t r = 1; r <= z.counts.size(); ++r)
            o.require(cover.at(r) == z.counts.at(r), name + " prediction disagrees with counts");
        const BigInt q(c.field().order());
        const FixedPointTable base = fixed_points(projective_line_spectrum(q, 6), 6);
        const OrderEstimate est = estimate_covering_order(base, cover, 0.5, 1, 6);
        worst = std::max(worst, est.min_C);
        o.require(est.min_C <= 3.0, name + " min_C = " + std::to_string(est.min_C));
    }
    std::ostringstream os;
    os << "largest min_C = " << worst;
    o.detail = o.pass ? os.str() : o.detail;
    return o;
}

// 10
Outcome round_trips()
{
    Outcome o;
    std::mt19937 rng(1010);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
        std::vector<BigInt> c(d + 1);
        c[0] = 1;
        for (std::size_t i = 1; i <= d; ++i)
            c[i] = std::uniform_int_distribution<long long>(-50, 50)(rng);
        if (d > 0 && c[d] == 0)
            c[d] = 1;
        const IntPoly p(std::move(c));
        o.require(poly_from_power_sums(newton_power_sums(p, d), d) == p, "newton round trip on " + p.str());
    }
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<BigInt> b(12);
        for (auto& x : b)
            x = std::uniform_int_distribution<int>(0, 20)(rng);
        const OrbitSpectrum s(BigInt(trial % 2 ? 2 : 9), b, false);
        o.require(spectrum_from_fixed_points(fixed_points(s, 12)).counts == s.counts, "mobius round trip");
    }
    o.detail = o.pass ? "1000 Newton, 1000 Mobius" : o.detail;
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        std::string name;
        double limit_seconds; // 0: no limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "zeta three-way agreement", 10, three_way_agreement},
        {2, "projective line", 0, projective_line},
        {3, "Hasse-Weil on Weierstrass curves", 30, hasse_weil},
        {4, "predict-verify counting", 120, predict_verify},
        {5, "non-projective example", 0, nonprojective},
        {6, "restriction hierarchy", 0, restriction},
        {7, "Burnside and Galois cover identity", 10, burnside},
        {8, "RHA bound equivalence", 0, bound_equivalence},
        {9, "covering order estimate", 0, order_estimate},
        {10, "Newton and Mobius round trips", 5, round_trips},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
            o.pass = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
        }
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << o.detail << "] "
                  << time.str() << " s" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
