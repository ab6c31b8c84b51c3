#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetamod/exactcore.hpp"

using namespace zetamod;

namespace {

TruncSeries ints(std::initializer_list<long long> v, std::size_t order) { return TruncSeries::from_integers(v, order); }

TruncSeries random_series(std::mt19937& rng, std::size_t order, long long lo, long long hi)
{
    std::uniform_int_distribution<long long> coef(lo, hi);
    std::vector<Rational> c(order + 1);
    for (auto& x : c)
        x = Rational(coef(rng), std::uniform_int_distribution<long long>(1, 4)(rng));
    return TruncSeries(std::move(c), order);
}

IntPoly random_quotient(std::mt19937& rng, std::size_t max_degree, long long bound)
{
    const std::size_t d = std::uniform_int_distribution<std::size_t>(0, max_degree)(rng);
    std::uniform_int_distribution<long long> coef(-bound, bound);
    std::vector<BigInt> c(d + 1);
    c[0] = 1;
    for (std::size_t i = 1; i <= d; ++i)
        c[i] = coef(rng);
    if (d > 0 && c[d] == 0)
        c[d] = 1;
    return IntPoly(std::move(c));
}

} // namespace

TEST(SeriesMul, BinomialSquare)
{
    EXPECT_EQ(series_mul(ints({1, 1}, 2), ints({1, 1}, 2)), ints({1, 2, 1}, 2));
}

TEST(SeriesMul, Telescoping)
{
    EXPECT_EQ(series_mul(ints({1, -1}, 5), ints({1, 1, 1, 1, 1, 1}, 5)), TruncSeries::one(5));
}

TEST(SeriesMul, ResultHasTheSmallerOrder)
{
    EXPECT_EQ(series_mul(ints({1, 1}, 2), ints({1, 1, 0, 0, 0}, 4)).order(), 2U);
}

TEST(SeriesMul, ProjectiveLineTimesDenominator)
{
    // 1 / ((1 - t)(1 - 2t)) has coefficients 2^{m+1} - 1
    const std::size_t d = 12;
    std::vector<BigInt> c;
    for (std::size_t m = 0; m <= d; ++m)
        c.push_back(ipow(BigInt(2), m + 1) - 1);
    const TruncSeries z = TruncSeries::from_integers(c, d);
    EXPECT_EQ(series_mul(series_mul(z, ints({1, -1}, d)), ints({1, -2}, d)), TruncSeries::one(d));
}

TEST(SeriesInv, GeometricSeries) { EXPECT_EQ(series_inv(ints({1, -1}, 3)), ints({1, 1, 1, 1}, 3)); }

TEST(SeriesInv, Quadratic)
{
    const TruncSeries inv = series_inv(ints({1, 3, 5}, 2));
    EXPECT_EQ(inv, ints({1, -3, 4}, 2));
    // recurrence oracle: c_n = -(3 c_{n-1} + 5 c_{n-2})
    std::vector<long long> c{1, -3};
    for (int n = 2; n <= 8; ++n)
        c.push_back(-(3 * c[n - 1] + 5 * c[n - 2]));
    const TruncSeries longer = series_inv(ints({1, 3, 5}, 8));
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(longer[n], Rational(c[n])) << n;
}

TEST(SeriesInv, RationalLeadingCoefficient)
{
    const TruncSeries inv = series_inv(ints({2, 1}, 2));
    EXPECT_EQ(inv[0], Rational(1, 2));
    EXPECT_EQ(inv[1], Rational(-1, 4));
    EXPECT_EQ(inv[2], Rational(1, 8));
}

TEST(SeriesInv, ZeroConstantTermThrows)
{
    try {
        series_inv(ints({0, 1}, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroConstantTerm);
    }
}

TEST(SeriesExpLog, ExpOfZeroIsOne) { EXPECT_EQ(series_exp(TruncSeries(5)), TruncSeries::one(5)); }

TEST(SeriesExpLog, LogOneMinusT)
{
    const TruncSeries l = series_log(ints({1, -1}, 4));
    EXPECT_EQ(l[0], Rational(0));
    for (int r = 1; r <= 4; ++r)
        EXPECT_EQ(l[r], Rational(-1, r));
}

TEST(SeriesExpLog, ExpOfProjectiveLineCounts)
{
    const std::size_t d = 10;
    std::vector<Rational> c(d + 1);
    for (std::size_t r = 1; r <= d; ++r)
        c[r] = Rational(ipow(BigInt(2), r) + 1) / static_cast<long long>(r);
    const TruncSeries z = series_exp(TruncSeries(c, d));
    for (std::size_t m = 0; m <= d; ++m)
        EXPECT_EQ(z[m], Rational(ipow(BigInt(2), m + 1) - 1));
}

TEST(SeriesExpLog, BadConstantTerms)
{
    EXPECT_THROW(series_exp(ints({1, 1}, 3)), Error);
    EXPECT_THROW(series_log(ints({2, 1}, 3)), Error);
}

TEST(SeriesProperty, ExpLogRoundTrip)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        TruncSeries a = random_series(rng, 8, -6, 6);
        std::vector<Rational> c = a.coeffs();
        c[0] = 0;
        const TruncSeries zero_const(c, 8);
        EXPECT_EQ(series_log(series_exp(zero_const)), zero_const);
        c[0] = 1;
        const TruncSeries one_const(c, 8);
        EXPECT_EQ(series_exp(series_log(one_const)), one_const);
    }
}

TEST(SeriesProperty, InverseTimesSelfIsOne)
{
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        TruncSeries a = random_series(rng, 9, -7, 7);
        if (a[0] == 0)
            continue;
        EXPECT_EQ(series_mul(a, series_inv(a)), TruncSeries::one(9));
    }
}

TEST(SeriesProperty, PowMatchesRepeatedProduct)
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const TruncSeries a = random_series(rng, 6, -3, 3);
        TruncSeries acc = TruncSeries::one(6);
        for (int n = 0; n <= 5; ++n) {
            EXPECT_EQ(series_pow(a, n), acc);
            acc = series_mul(acc, a);
        }
    }
}

TEST(Newton, SingleRootOne)
{
    const PowerSumTable s = newton_power_sums(IntPoly{1, -1}, 3);
    for (std::size_t r = 1; r <= 3; ++r)
        EXPECT_EQ(s.at(r), Rational(1));
}

TEST(Newton, EllipticQuotient)
{
    const PowerSumTable s = newton_power_sums(IntPoly{1, 3, 5}, 2);
    // S_1 = -a_1, S_2 = a_1^2 - 2 a_2
    EXPECT_EQ(s.at(1), Rational(-3));
    EXPECT_EQ(s.at(2), Rational(9 - 10));
}

TEST(Newton, DoubleRoot)
{
    const PowerSumTable s = newton_power_sums(IntPoly{1, -4, 4}, 3);
    EXPECT_EQ(s.at(1), Rational(4));
    EXPECT_EQ(s.at(2), Rational(8));
    EXPECT_EQ(s.at(3), Rational(16));
}

TEST(Newton, InverseDirection)
{
    PowerSumTable s{{Rational(-3), Rational(-1)}};
    EXPECT_EQ(poly_from_power_sums(s, 2), (IntPoly{1, 3, 5}));
}

TEST(Newton, DegenerateReportsActualDegree)
{
    PowerSumTable s{{Rational(0), Rational(0)}};
    const IntPoly p = poly_from_power_sums(s, 2);
    EXPECT_EQ(p.degree(), 0U);
    EXPECT_EQ(p, (IntPoly{1}));
}

TEST(Newton, NonIntegral)
{
    PowerSumTable s{{Rational(1, 2)}};
    try {
        poly_from_power_sums(s, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIntegral);
    }
}

TEST(Newton, InsufficientData)
{
    PowerSumTable s{{Rational(1)}};
    EXPECT_THROW(poly_from_power_sums(s, 2), Error);
}

TEST(NewtonProperty, RoundTrip)
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly p = random_quotient(rng, 12, 9);
        const std::size_t d = p.degree();
        EXPECT_EQ(poly_from_power_sums(newton_power_sums(p, d), d), p) << p.str();
    }
}

TEST(PowerMap, SingleRootCubed) { EXPECT_EQ(power_map(IntPoly{1, -2}, 3), (IntPoly{1, -8})); }

TEST(PowerMap, EllipticSquare)
{
    EXPECT_EQ(power_map(IntPoly{1, 3, 5}, 2), (IntPoly{1, 1, 25}));
    const auto oracle = oracle::quadratic_power_map(3, 5, 2);
    EXPECT_EQ(power_map(IntPoly{1, 3, 5}, 2), (IntPoly{oracle[0], oracle[1], oracle[2]}));
}

TEST(PowerMap, AgreesWithNumericRoots)
{
    for (long long a1 = -4; a1 <= 4; ++a1)
        for (long long a2 = 1; a2 <= 7; ++a2)
            for (int r = 1; r <= 5; ++r) {
                const auto o = oracle::quadratic_power_map(static_cast<double>(a1), static_cast<double>(a2), r);
                EXPECT_EQ(power_map(IntPoly{1, a1, a2}, static_cast<std::size_t>(r)), (IntPoly{o[0], o[1], o[2]}))
                    << a1 << " " << a2 << " " << r;
            }
}

TEST(PowerMap, Identity)
{
    const IntPoly p{1, -7, 3, 11};
    EXPECT_EQ(power_map(p, 1), p);
}

TEST(PowerMapProperty, Composition)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly p = random_quotient(rng, 5, 4);
        for (std::size_t r = 1; r <= 3; ++r)
            for (std::size_t s = 1; s <= 3; ++s)
                EXPECT_EQ(power_map(power_map(p, r), s), power_map(p, r * s));
    }
}

TEST(Arithmetic, MobiusAndDivisors)
{
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_EQ(mobius(30), -1);
    EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
    EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
}

TEST(ArithmeticProperty, MobiusSumsToIndicator)
{
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        int sum = 0;
        for (auto d : divisors(n))
            sum += mobius(d);
        ASSERT_EQ(sum, n == 1 ? 1 : 0) << n;
    }
}

TEST(ArithmeticProperty, MobiusMatchesNaive)
{
    for (std::uint64_t n = 1; n <= 2000; ++n)
        ASSERT_EQ(mobius(n), oracle::mobius_naive(n)) << n;
}

TEST(Arithmetic, PrimePowers)
{
    EXPECT_TRUE(is_prime_power(BigInt(2)));
    EXPECT_TRUE(is_prime_power(BigInt(8)));
    EXPECT_TRUE(is_prime_power(BigInt(49)));
    EXPECT_FALSE(is_prime_power(BigInt(1)));
    EXPECT_FALSE(is_prime_power(BigInt(6)));
    EXPECT_FALSE(is_prime_power(BigInt(0)));
    const auto [p, e] = prime_power_decomposition(BigInt(3125));
    EXPECT_EQ(p, 5);
    EXPECT_EQ(e, 5U);
}

TEST(IntPolyBasics, Printing)
{
    EXPECT_EQ((IntPoly{1, 3, 5}).str(), "1 + 3t + 5t^2");
    EXPECT_EQ((IntPoly{1, -1}).str(), "1 - t");
    EXPECT_EQ((IntPoly{0}).str(), "0");
    EXPECT_EQ((IntPoly{1, 0, 0}).degree(), 0U);
}
