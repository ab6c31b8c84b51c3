#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "zetamod/cli.hpp"

namespace fs = std::filesystem;
using namespace zetamod;

namespace {

std::string data(const std::string& name) { return std::string(ZETAMOD_DATA_DIR) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "zetamod");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, ZetaOfProjectiveLine)
{
    const Result r = run({"zeta", data("p1_q2.spectrum"), "-D", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "zeta: 1 + 3t + 7t^2 + 15t^3 + O(t^4)"));
    EXPECT_TRUE(contains(r.out, "agreement: yes"));
}

TEST(Cli, ZetaOfCurveUsesEveryMethod)
{
    const Result r = run({"zeta", "--curve", data("ell5.curve"), "-D", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "methods: euler divisors exp closed_form"));
    EXPECT_TRUE(contains(r.out, "quotient: 1 + 3t + 5t^2"));
}

TEST(Cli, ZetaOfEmptySpectrum)
{
    const Result r = run({"zeta", data("empty.spectrum")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "zeta: 1 + O(t^11)"));
}

TEST(Cli, ZetaInputKindMismatchIsUsageError)
{
    EXPECT_EQ(run({"zeta", "--curve", data("p1_q2.spectrum")}).code, 1);
    EXPECT_EQ(run({"zeta"}).code, 1);
}

TEST(Cli, RhaVerdicts)
{
    const Result ell = run({"rha", data("ell5.curve")});
    EXPECT_EQ(ell.code, 0);
    EXPECT_TRUE(contains(ell.out, "lambda: 1/2"));
    EXPECT_TRUE(contains(ell.out, "verdict: Holds"));

    const Result np = run({"rha", data("nonprojective_q2_m3_d2.json")});
    EXPECT_EQ(np.code, 0);
    EXPECT_TRUE(contains(np.out, "lambda: 1/3"));

    const Result bad = run({"rha", data("failing.quotient")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_TRUE(contains(bad.out, "verdict: Fails"));
}

TEST(Cli, RhaWithoutPolynomialQuotientIsInconclusive)
{
    const fs::path tmp = fs::temp_directory_path() / "zetamod_cli_inconclusive.spectrum";
    {
        std::ofstream f(tmp);
        f << R"({"kind":"spectrum","base_q":2,"horizon":12,"complete":false,"counts":[[1,1],[5,1],[12,1]]})";
    }
    EXPECT_EQ(run({"rha", tmp.string()}).code, 3);
    fs::remove(tmp);
}

TEST(Cli, SingularCurveIsMathFailure)
{
    const Result r = run({"rha", data("cusp_f5.curve")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "FunctionalEquationViolated"));
}

TEST(Cli, CountFormats)
{
    const Result text = run({"count", data("ell5.curve"), "-r", "3"});
    EXPECT_EQ(text.code, 0);
    EXPECT_TRUE(contains(text.out, "3 108"));
    const Result csv = run({"--format", "csv", "count", data("ell5.curve"), "-r", "2"});
    EXPECT_EQ(csv.out, "r,N_r\n1,9\n2,27\n");
    const Result json = run({"count", data("ell5.curve"), "--format", "json"});
    EXPECT_TRUE(contains(json.out, "\"counts\""));
}

TEST(Cli, BudgetExceeded)
{
    ::setenv("ZETAMOD_BUDGET", "100", 1);
    const Result r = run({"count", data("ell5.curve"), "-r", "3"});
    ::unsetenv("ZETAMOD_BUDGET");
    EXPECT_EQ(r.code, 4);
}

TEST(Cli, RestrictByOneIsIdentity)
{
    const fs::path tmp = fs::temp_directory_path() / "zetamod_cli_restrict.spectrum";
    EXPECT_EQ(run({"restrict", data("p1_q2.spectrum"), "-r", "1", "-o", tmp.string()}).code, 0);
    std::ifstream a(tmp), b(data("p1_q2.spectrum"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
    fs::remove(tmp);
}

TEST(Cli, RestrictByThree)
{
    const Result r = run({"restrict", data("p1_q2.spectrum"), "-r", "3"});
    EXPECT_EQ(r.code, 0);
    const OrbitSpectrum s = std::get<OrbitSpectrum>(parse_document(r.out).value);
    EXPECT_EQ(s.base_q, 8);
    EXPECT_EQ(s.horizon, 4U);
    EXPECT_EQ(s.count(1), 9);
}

TEST(Cli, Cover)
{
    const Result r = run({"cover", data("klein8.model"), "-r", "4"});
    EXPECT_EQ(r.code, 0);
    const Result csv = run({"cover", data("c4.model"), "-r", "2", "--format", "csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_TRUE(contains(csv.out, "2,4,4,1,1"));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({"rha", "/nonexistent/zetamod/input.json"}).code, 1);
    EXPECT_EQ(run({"count", data("ell5.curve"), "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic)
{
    for (const auto& args : std::vector<std::vector<std::string>>{{"rha", data("klein_f2.curve")},
                                                                  {"zeta", data("nonprojective_q2_m3_d2.json")},
                                                                  {"cover", data("klein8.model"), "--format", "json"}}) {
        const Result a = run(args), b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, EveryCurveInTheCorpusHolds)
{
    for (const char* name : {"ell4.curve", "ell5.curve", "ell5b.curve", "ell7a.curve", "ell7b.curve", "ell7c.curve",
                             "ell7d.curve", "klein_f2.curve", "klein_f3.curve", "fermat4_f3.curve", "conic_f3.curve"}) {
        const Result r = run({"rha", data(name)});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.err;
        EXPECT_TRUE(contains(r.out, "verdict: Holds")) << name;
    }
}
