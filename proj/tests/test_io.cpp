#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "zetamod/io.hpp"

using namespace zetamod;

namespace {

std::optional<ErrorKind> kind_of(const std::string& text)
{
    try {
        parse_document(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

} // namespace

TEST(ParseDocument, Spectrum)
{
    const Document d = parse_document(R"({"kind":"spectrum","base_q":2,"horizon":4,"complete":false,
                                           "counts":[[1,3],[2,1],[3,2],[4,3]]})");
    EXPECT_EQ(d.kind, "spectrum");
    const auto& s = std::get<OrbitSpectrum>(d.value);
    EXPECT_EQ(s.counts, (std::vector<BigInt>{3, 1, 2, 3}));
    EXPECT_FALSE(s.complete);
}

TEST(ParseDocument, BigIntegersAsStrings)
{
    const Document d = parse_document(
        R"({"kind":"fixed_points","base_q":"2","values":["123456789012345678901234567890", 5]})");
    const auto& t = std::get<FixedPointTable>(d.value);
    EXPECT_EQ(t.at(1), BigInt("123456789012345678901234567890"));
    EXPECT_EQ(t.at(2), 5);
}

TEST(ParseDocument, CurveWithDigitCoefficient)
{
    const Document d = parse_document(R"({"kind":"curve","p":2,"e":2,"degree":3,"curve_type":"weierstrass",
        "monomials":[[0,2,1,1],[1,1,1,1],[3,0,0,1],[0,0,3,[0,1]]]})");
    const auto& c = std::get<CurveModel>(d.value);
    EXPECT_EQ(c.field().order(), 4U);
    EXPECT_EQ(c.coefficient(0, 0, 3), 2U);
    EXPECT_EQ(c.genus(), 1U);
}

TEST(ParseDocument, ModelAndQuotient)
{
    const Document m = parse_document(
        R"({"kind":"model","phi":[1,2,3,0],"generators":[[2,3,0,1]],"subgroup_generators":[]})");
    const auto& md = std::get<ModelDocument>(m.value);
    EXPECT_EQ(md.action.order(), 2U);
    ASSERT_TRUE(md.subgroup_generators);
    EXPECT_TRUE(md.subgroup_generators->empty());
    const Document q = parse_document(R"({"kind":"quotient","q":4,"coeffs":[1,-8,19,-12]})");
    EXPECT_EQ(std::get<QuotientPoly>(q.value).poly, (IntPoly{1, -8, 19, -12}));
}

TEST(ParseDocument, Generators)
{
    const Document p = parse_document(R"({"kind":"projective_line","q":3,"horizon":5})");
    EXPECT_EQ(std::get<OrbitSpectrum>(p.value).count(1), 4);
    const Document n = parse_document(R"({"kind":"nonprojective","q":2,"m":3,"d":2,"horizon":6})");
    ASSERT_TRUE(n.nonprojective);
    EXPECT_EQ(n.nonprojective->m, 3U);
    EXPECT_EQ(std::get<OrbitSpectrum>(n.value).base_q, 8);
}

TEST(ParseDocument, Errors)
{
    EXPECT_EQ(kind_of("{not json"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"base_q":2})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"kind":"nonsense"})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"kind":"spectrum","base_q":2,"horizon":2,"complete":false,"counts":[[3,1]]})"),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"kind":"spectrum","base_q":2,"horizon":2,"complete":"yes","counts":[]})"),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"kind":"fixed_points","base_q":2,"values":["12a"]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"kind":"quotient","q":6,"coeffs":[1]})"), ErrorKind::NotPrimePower);
    EXPECT_EQ(kind_of(R"({"kind":"model","phi":[0,0],"generators":[]})"), ErrorKind::InvalidPermutation);
    EXPECT_EQ(kind_of(R"({"kind":"curve","p":4,"e":1,"degree":3,"curve_type":"custom","genus":1,"monomials":[]})"),
              ErrorKind::NotPrime);
    EXPECT_THROW(load_document("/nonexistent/zetamod/file.json"), Error);
}

TEST(Serialize, SpectrumRoundTrip)
{
    std::mt19937 rng(91);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> b(std::uniform_int_distribution<std::size_t>(0, 10)(rng));
        for (auto& x : b)
            x = std::uniform_int_distribution<int>(0, 4)(rng);
        const OrbitSpectrum s(BigInt(trial % 2 ? 3 : 8), b, trial % 3 == 0);
        const std::string text = serialize_spectrum(s);
        const OrbitSpectrum back = std::get<OrbitSpectrum>(parse_document(text).value);
        EXPECT_EQ(back, s);
        EXPECT_EQ(serialize_spectrum(back), text);
    }
}

TEST(Serialize, FixedPointsAndQuotient)
{
    FixedPointTable t;
    t.base_q = 5;
    t.values = {9, 27, BigInt("99999999999999999999999")};
    const FixedPointTable back = std::get<FixedPointTable>(parse_document(serialize_fixed_points(t)).value);
    EXPECT_EQ(back.values, t.values);
    const QuotientPoly p(IntPoly{1, 3, 5}, BigInt(5));
    EXPECT_EQ(std::get<QuotientPoly>(parse_document(serialize_quotient(p)).value).poly, p.poly);
}

TEST(Serialize, Layout)
{
    const std::string text = serialize_spectrum(OrbitSpectrum(BigInt(2), {3, 0, 2}, false));
    EXPECT_EQ(text, "{\n  \"kind\": \"spectrum\",\n  \"base_q\": 2,\n  \"horizon\": 3,\n  \"complete\": false,\n"
                    "  \"counts\": [\n    [1,3],\n    [3,2]\n  ]\n}\n");
}
