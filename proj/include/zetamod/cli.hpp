#pragma once

// Command implementations behind the zetamod tool. Each command writes its
// report to the given stream and returns the process exit code:
// 0 pass, 1 usage or parse error, 2 mathematical failure, 3 inconclusive,
// 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covmodel.hpp"
#include "exactcore.hpp"
#include "ffgeom.hpp"
#include "io.hpp"
#include "rha.hpp"
#include "spectrum.hpp"
#include "zetafn.hpp"

namespace zetamod::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMathFailure = 2, kInconclusive = 3, kBudget = 4 };

enum class Format { Text, Csv, Json };

inline int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BudgetExceeded: return kBudget;
    case ErrorKind::ParseError:
    case ErrorKind::BadParameters:
    case ErrorKind::HorizonExceeded:
    case ErrorKind::InsufficientData:
    case ErrorKind::EmptyRange:
    case ErrorKind::InvalidPermutation:
    case ErrorKind::NotPrime:
    case ErrorKind::NotPrimePower:
    case ErrorKind::DegreeTooLarge:
    case ErrorKind::BaseMismatch: return kUsage;
    default: return kMathFailure;
    }
}

/// ZETAMOD_BUDGET overrides the point-count budget.
inline std::uint64_t budget_from_env()
{
    const char* raw = std::getenv("ZETAMOD_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return kDefaultPointBudget;
    const std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
        throw Error(ErrorKind::BadParameters, "ZETAMOD_BUDGET must be a non-negative integer");
    return std::stoull(s);
}

using json = nlohmann::ordered_json;

inline json bigint_list(const std::vector<BigInt>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(detail::bigint_json(x));
    return out;
}

inline json series_json(const TruncSeries& s)
{
    json out = json::array();
    for (const auto& c : s.coeffs())
        out.push_back(is_integer(c) ? detail::bigint_json(to_integer(c)) : json(c.str()));
    return out;
}

inline std::string fmt_double(double x, int digits = 12)
{
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

inline std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

/// lambda = log_q |a_d|^{1/d} as an exact fraction when |a_d| and q are
/// powers of the same prime.
inline std::optional<Rational> exact_lambda(const QuotientPoly& p)
{
    if (p.degree() == 0 || p.abs_leading() == 1)
        return Rational(0);
    const auto [pa, ea] = prime_power_decomposition(p.abs_leading());
    const auto [pq, eq] = prime_power_decomposition(p.q);
    if (ea == 0 || eq == 0 || pa != pq)
        return std::nullopt;
    return Rational(BigInt(ea), BigInt(eq) * static_cast<unsigned long long>(p.degree()));
}

inline std::string lambda_text(const QuotientPoly& p)
{
    if (const auto l = exact_lambda(p))
        return l->str();
    return fmt_double(p.lambda());
}

// ---------------------------------------------------------------------------
// zeta

struct ZetaSources {
    BigInt q;
    std::optional<OrbitSpectrum> spectrum;
    std::optional<FixedPointTable> fixed;
    std::optional<TruncSeries> closed_form;
    std::vector<std::string> notes;
};

inline std::optional<OrbitSpectrum> try_realize(const FixedPointTable& t, std::vector<std::string>& notes)
{
    try {
        return spectrum_from_fixed_points(t);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonRealizable)
            throw;
        notes.push_back(std::string("fixed points are not realizable by a module: ") + e.what());
        return std::nullopt;
    }
}

inline ZetaSources zeta_sources(const Document& doc, std::size_t order, std::uint64_t budget)
{
    ZetaSources src;
    if (const auto* s = std::get_if<OrbitSpectrum>(&doc.value)) {
        src.q = s->base_q;
        src.spectrum = *s;
        if (!s->covers(order))
            throw Error(ErrorKind::HorizonExceeded, "order " + std::to_string(order) + " exceeds the spectrum horizon " +
                                                        std::to_string(s->horizon));
        src.fixed = fixed_points(*s, order);
    } else if (const auto* t = std::get_if<FixedPointTable>(&doc.value)) {
        src.q = t->base_q;
        if (t->size() < order)
            throw Error(ErrorKind::HorizonExceeded, "order " + std::to_string(order) + " needs N_1..N_" +
                                                        std::to_string(order) + " (have " + std::to_string(t->size()) + ")");
        FixedPointTable head = *t;
        head.values.resize(order);
        src.fixed = head;
        src.spectrum = try_realize(head, src.notes);
    } else if (const auto* c = std::get_if<CurveModel>(&doc.value)) {
        const CurveZetaData data = curve_zeta(*c, budget);
        src.q = data.counts.base_q;
        src.fixed = curve_fixed_points(data, order);
        src.spectrum = try_realize(*src.fixed, src.notes);
        src.closed_form = series_mul(data.weil_poly.to_series(order), projective_line_zeta(src.q, order));
        src.notes.push_back("weil polynomial: " + data.weil_poly.str());
        src.notes.push_back("N_r counted for r <= " + std::to_string(data.counts.size()) + ", predicted beyond");
    } else if (const auto* p = std::get_if<QuotientPoly>(&doc.value)) {
        src.q = p->q;
        src.fixed = predicted_fixed_points(*p, order);
        src.spectrum = try_realize(*src.fixed, src.notes);
        src.closed_form = series_mul(p->poly.to_series(order), projective_line_zeta(src.q, order));
    } else if (const auto* m = std::get_if<ModelDocument>(&doc.value)) {
        src.q = m->base_q;
        src.spectrum = orbit_spectrum_of(m->action.model(), m->base_q);
        src.fixed = fixed_points(*src.spectrum, order);
    }
    return src;
}

inline int cmd_zeta(const Document& doc, std::size_t order, Format format, std::ostream& out,
                    std::uint64_t budget = kDefaultPointBudget)
{
    if (order < 1)
        throw Error(ErrorKind::BadParameters, "-D must be >= 1");
    const ZetaSources src = zeta_sources(doc, order, budget);
    const ZetaContext ctx(src.q, order);

    std::vector<std::pair<std::string, TruncSeries>> methods;
    if (src.spectrum) {
        methods.emplace_back("euler", zeta_euler(*src.spectrum, ctx));
        methods.emplace_back("divisors", divisor_count_series(divisor_counts_bruteforce(*src.spectrum, order)));
    }
    if (src.fixed)
        methods.emplace_back("exp", zeta_exp(*src.fixed, ctx));
    if (src.closed_form)
        methods.emplace_back("closed_form", *src.closed_form);

    bool agree = true;
    for (const auto& m : methods)
        agree = agree && m.second == methods.front().second;
    const TruncSeries& zeta = methods.front().second;
    const TruncSeries quotient_series = zeta_quotient(zeta, ctx);

    if (format == Format::Json) {
        json j;
        j["q"] = detail::bigint_json(src.q);
        j["order"] = order;
        json names = json::array();
        for (const auto& m : methods)
            names.push_back(m.first);
        j["methods"] = names;
        j["agreement"] = agree;
        if (agree) {
            j["zeta"] = series_json(zeta);
        } else {
            json all;
            for (const auto& m : methods)
                all[m.first] = series_json(m.second);
            j["zeta"] = all;
        }
        j["quotient"] = series_json(quotient_series);
        j["notes"] = src.notes;
        out << j.dump(2) << "\n";
    } else if (format == Format::Csv) {
        out << "m";
        for (const auto& m : methods)
            out << "," << m.first;
        out << "\n";
        for (std::size_t i = 0; i <= order; ++i) {
            out << i;
            for (const auto& m : methods)
                out << "," << m.second[i].str();
            out << "\n";
        }
    } else {
        out << "q: " << src.q << "\n";
        out << "order: " << order << "\n";
        out << "methods:";
        for (const auto& m : methods)
            out << " " << m.first;
        out << "\n";
        out << "agreement: " << (agree ? "yes" : "NO") << "\n";
        if (agree) {
            out << "zeta: " << zeta.str() << "\n";
        } else {
            for (const auto& m : methods)
                out << "zeta[" << m.first << "]: " << m.second.str() << "\n";
        }
        out << "quotient: " << quotient_series.str() << "\n";
        for (const auto& n : src.notes)
            out << "note: " << n << "\n";
    }
    return agree ? kOk : kMathFailure;
}

// ---------------------------------------------------------------------------
// rha

struct RhaInput {
    std::optional<QuotientPoly> quotient;
    FixedPointTable fixed;
    std::size_t order = 0;
    std::size_t tail = 0;
    std::vector<std::string> notes;
};

inline RhaInput rha_input(const Document& doc, std::optional<std::size_t> order, std::optional<std::size_t> tail,
                          std::uint64_t budget)
{
    RhaInput in;
    auto detect = [&](const FixedPointTable& t, std::size_t d) {
        const ZetaContext ctx(t.base_q, d);
        const TruncSeries p = zeta_quotient(zeta_exp(t, ctx), ctx);
        in.order = d;
        in.tail = tail.value_or(default_tail(d));
        in.quotient = detect_polynomial(p, t.base_q, in.tail);
    };
    if (const auto* p = std::get_if<QuotientPoly>(&doc.value)) {
        in.quotient = *p;
        in.fixed = predicted_fixed_points(*p, order.value_or(6));
        in.notes.push_back("fixed points predicted from the quotient");
    } else if (const auto* c = std::get_if<CurveModel>(&doc.value)) {
        const CurveZetaData data = curve_zeta(*c, budget);
        in.quotient = data.quotient();
        in.fixed = data.counts;
        in.notes.push_back("fixed points counted by enumeration");
    } else if (const auto* s = std::get_if<OrbitSpectrum>(&doc.value)) {
        std::size_t d = s->horizon;
        if (s->complete)
            d = std::max<std::size_t>(12, 2 * s->horizon + 8);
        d = order.value_or(d);
        if (!s->covers(d))
            throw Error(ErrorKind::HorizonExceeded, "order " + std::to_string(d) + " exceeds the spectrum horizon");
        in.fixed = fixed_points(*s, d);
        detect(in.fixed, d);
    } else if (const auto* t = std::get_if<FixedPointTable>(&doc.value)) {
        const std::size_t d = order.value_or(t->size());
        if (d > t->size())
            throw Error(ErrorKind::HorizonExceeded, "order " + std::to_string(d) + " needs more fixed points");
        in.fixed = *t;
        in.fixed.values.resize(d);
        detect(in.fixed, d);
    } else if (const auto* m = std::get_if<ModelDocument>(&doc.value)) {
        const OrbitSpectrum s = orbit_spectrum_of(m->action.model(), m->base_q);
        const std::size_t d = order.value_or(std::max<std::size_t>(12, 2 * s.horizon + 8));
        in.fixed = fixed_points(s, d);
        detect(in.fixed, d);
    }
    return in;
}

inline int cmd_rha(const Document& doc, double tol, std::optional<std::size_t> tail, std::optional<std::size_t> order,
                   Format format, std::ostream& out, std::uint64_t budget = kDefaultPointBudget)
{
    if (!(tol > 0))
        throw Error(ErrorKind::BadParameters, "--tol must be positive");
    RhaInput in = rha_input(doc, order, tail, budget);
    if (doc.nonprojective && doc.nonprojective->m >= 3)
        in.notes.push_back("m >= 3: no smooth irreducible variety over F_{q^m} has this module as its points");

    if (!in.quotient) {
        if (format == Format::Json) {
            json j;
            j["verdict"] = "NotPolynomial";
            j["order"] = in.order;
            j["tail"] = in.tail;
            out << j.dump(2) << "\n";
        } else {
            out << "verdict: NotPolynomial\n";
            out << "note: no polynomial quotient detected at order " << in.order << " with tail " << in.tail << "\n";
        }
        return kInconclusive;
    }

    const QuotientPoly& q = *in.quotient;
    const RhaReport rep = rha_check(q, tol);
    const CheckReport fe = functional_equation_check(q);
    FixedPointTable bounded = in.fixed;
    if (bounded.size() > 6)
        bounded.values.resize(6);
    const CheckReport bounds = rha_bounds_check(bounded, q);

    std::vector<std::string> notes = in.notes;
    notes.insert(notes.end(), rep.notes.begin(), rep.notes.end());

    if (format == Format::Json) {
        json j;
        j["quotient"] = bigint_list(q.poly.coeffs());
        j["q"] = detail::bigint_json(q.q);
        j["degree"] = rep.degree;
        j["abs_leading"] = detail::bigint_json(rep.abs_leading);
        j["lambda"] = lambda_text(q);
        j["target_magnitude"] = rep.target_magnitude;
        json roots = json::array();
        for (std::size_t i = 0; i < rep.inverse_roots.size(); ++i)
            roots.push_back({{"re", rep.inverse_roots[i].real()},
                             {"im", rep.inverse_roots[i].imag()},
                             {"abs", rep.root_magnitudes[i]}});
        j["inverse_roots"] = roots;
        j["max_deviation"] = rep.max_deviation;
        j["tolerance"] = rep.tolerance;
        json checks;
        for (const auto& [name, ok] : rep.checks)
            checks[name] = ok;
        j["checks"] = checks;
        j["functional_equation"] = fe.all_pass();
        json brows = json::array();
        for (const auto& r : bounds.rows)
            brows.push_back({{"r", r.index}, {"excess", r.lhs}, {"bound", r.rhs}, {"pass", r.pass}});
        j["bounds"] = brows;
        j["verdict"] = to_string(rep.verdict);
        j["notes"] = notes;
        out << j.dump(2) << "\n";
    } else if (format == Format::Csv) {
        out << "r,excess,bound,pass\n";
        for (const auto& r : bounds.rows)
            out << r.index << "," << r.lhs << "," << r.rhs << "," << (r.pass ? 1 : 0) << "\n";
    } else {
        out << "quotient: " << q.poly.str() << "\n";
        out << "q: " << q.q << "\n";
        out << "degree: " << rep.degree << "\n";
        out << "|a_d|: " << rep.abs_leading << "\n";
        out << "lambda: " << lambda_text(q) << "\n";
        out << "target magnitude: " << fmt_double(rep.target_magnitude) << "\n";
        out << "inverse roots:\n";
        for (std::size_t i = 0; i < rep.inverse_roots.size(); ++i) {
            const auto& w = rep.inverse_roots[i];
            out << "  " << fmt_double(w.real()) << (w.imag() < 0 ? " - " : " + ") << fmt_double(std::abs(w.imag()))
                << "i  |w| = " << fmt_double(rep.root_magnitudes[i]) << "\n";
        }
        out << "max relative deviation: " << fmt_double(rep.max_deviation, 6) << "\n";
        out << "tolerance: " << fmt_double(rep.tolerance, 6) << "\n";
        out << "checks:\n";
        for (const auto& [name, ok] : rep.checks)
            out << "  " << name << ": " << pass_fail(ok) << "\n";
        out << "functional equation: " << pass_fail(fe.all_pass()) << "\n";
        out << "bounds:\n";
        for (const auto& r : bounds.rows)
            out << "  r=" << r.index << " |N_r - q^r - 1| = " << r.lhs << " <= " << r.rhs << ": " << pass_fail(r.pass)
                << "\n";
        out << "verdict: " << to_string(rep.verdict) << "\n";
        for (const auto& n : notes)
            out << "note: " << n << "\n";
    }
    switch (rep.verdict) {
    case Verdict::Holds: return kOk;
    case Verdict::Fails: return kMathFailure;
    case Verdict::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

// ---------------------------------------------------------------------------
// count, restrict, cover

inline int cmd_count(const CurveModel& c, std::size_t r_max, Format format, std::ostream& out,
                     std::uint64_t budget = kDefaultPointBudget)
{
    if (r_max < 1)
        throw Error(ErrorKind::BadParameters, "-r must be >= 1");
    std::vector<BigInt> counts;
    for (std::size_t r = 1; r <= r_max; ++r)
        counts.push_back(count_points(c, r, budget));
    if (format == Format::Json) {
        json j;
        j["q"] = c.field().order();
        j["counts"] = bigint_list(counts);
        out << j.dump(2) << "\n";
    } else {
        out << (format == Format::Csv ? "r,N_r\n" : "r N_r\n");
        for (std::size_t r = 1; r <= r_max; ++r)
            out << r << (format == Format::Csv ? "," : " ") << counts[r - 1] << "\n";
    }
    return kOk;
}

inline int cmd_restrict(const OrbitSpectrum& s, std::size_t r, std::ostream& out)
{
    out << serialize_spectrum(restrict(s, r));
    return kOk;
}

inline int cmd_cover(const ModelDocument& doc, std::size_t r_max, Format format, std::ostream& out)
{
    if (r_max < 1)
        throw Error(ErrorKind::BadParameters, "-r must be >= 1");
    const GroupAction& a = doc.action;
    const GaloisCoverReport cover = galois_cover_check(a);
    const std::vector<BurnsideRow> rows = burnside_rows(a, r_max);
    std::optional<GaloisClosureReport> closure;
    if (doc.subgroup_generators)
        closure = galois_closure_check(a, *doc.subgroup_generators);

    bool ok = cover.pass();
    for (const auto& row : rows)
        ok = ok && row.pass();
    if (closure)
        ok = ok && closure->pass();

    std::map<std::size_t, std::size_t> inertia_hist;
    for (std::size_t e : cover.stats.inertia)
        ++inertia_hist[e];

    if (format == Format::Csv) {
        out << "r,lhs,rhs,stabilizer_count,pass\n";
        for (const auto& row : rows)
            out << row.r << "," << row.lhs << "," << row.rhs << "," << (row.stabilizer_count_ok ? 1 : 0) << ","
                << (row.pass() ? 1 : 0) << "\n";
    } else if (format == Format::Json) {
        json j;
        j["points"] = a.model().size();
        j["group_order"] = a.order();
        j["quotient_points"] = cover.quotient.model.size();
        j["degree"] = cover.stats.degree;
        json hist;
        for (const auto& [e, n] : inertia_hist)
            hist[std::to_string(e)] = n;
        j["inertia"] = hist;
        j["exceptional_fibres"] = cover.stats.exceptional_fibres.size();
        j["fibre_decomposition"] = cover.stats.fibre_decomposition_ok;
        j["inertia_fibre_constant"] = cover.inertia_fibre_constant;
        j["inertia_divides_order"] = cover.inertia_divides_order;
        j["pullback_orbits"] = cover.pullback_orbits_ok;
        json brows = json::array();
        for (const auto& row : rows)
            brows.push_back({{"r", row.r}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass()}});
        j["burnside"] = brows;
        if (closure) {
            j["closure"] = {{"order_h", closure->order_h},
                            {"order_h1", closure->order_h1},
                            {"index", closure->index},
                            {"xi_degree", closure->xi_stats.degree},
                            {"diagram_commutes", closure->diagram_commutes},
                            {"pass", closure->pass()}};
        }
        j["pass"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "points: " << a.model().size() << "\n";
        out << "|H|: " << a.order() << "\n";
        out << "quotient points: " << cover.quotient.model.size() << "\n";
        out << "covering degree: " << cover.stats.degree << "\n";
        out << "inertia:";
        for (const auto& [e, n] : inertia_hist)
            out << " e=" << e << " x" << n;
        out << "\n";
        out << "exceptional fibres: " << cover.stats.exceptional_fibres.size() << "\n";
        out << "fibre decomposition: " << pass_fail(cover.stats.fibre_decomposition_ok) << "\n";
        out << "inertia constant on fibres: " << pass_fail(cover.inertia_fibre_constant) << "\n";
        out << "inertia divides |H|: " << pass_fail(cover.inertia_divides_order) << "\n";
        out << "pull-back orbits: " << pass_fail(cover.pullback_orbits_ok) << "\n";
        out << "burnside:\n";
        for (const auto& row : rows)
            out << "  r=" << row.r << " sum_h |Fix(h phi^r)| = " << row.lhs << ", |H| |Fix(phi'^r)| = " << row.rhs
                << ": " << pass_fail(row.pass()) << "\n";
        if (closure) {
            out << "galois closure: |H| = " << closure->order_h << ", |H1| = " << closure->order_h1
                << ", index = " << closure->index << ", xi degree = " << closure->xi_stats.degree << "\n";
            out << "diagram commutes: " << pass_fail(closure->diagram_commutes) << "\n";
            out << "xi fibre decomposition: " << pass_fail(closure->xi_stats.fibre_decomposition_ok) << "\n";
        }
        out << "result: " << (ok ? "pass" : "FAIL") << "\n";
    }
    return ok ? kOk : kMathFailure;
}

// ---------------------------------------------------------------------------
// argument handling

inline Format parse_format(const std::string& s)
{
    if (s == "text")
        return Format::Text;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw Error(ErrorKind::BadParameters, "unknown format \"" + s + "\"");
}

template <typename T>
const T& expect(const Document& doc, const char* what)
{
    const T* v = std::get_if<T>(&doc.value);
    if (v == nullptr)
        throw Error(ErrorKind::ParseError, "expected " + std::string(what) + ", got a document of kind \"" + doc.kind + "\"");
    return *v;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"zeta-functions and the Riemann Hypothesis Analogue for locally finite modules", "zetamod"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string zeta_input, zeta_curve, zeta_spectrum, zeta_fixed;
    std::size_t zeta_order = 10;
    auto* zeta = app.add_subcommand("zeta", "zeta-function to order D by every applicable expression");
    zeta->add_option("input", zeta_input, "input document");
    zeta->add_option("--curve", zeta_curve, "curve document");
    zeta->add_option("--spectrum", zeta_spectrum, "spectrum document");
    zeta->add_option("--fixed-points", zeta_fixed, "fixed-point document");
    zeta->add_option("-D,--order", zeta_order, "truncation order");

    std::string rha_in;
    double rha_tol = 1e-9;
    std::optional<std::size_t> rha_tail, rha_order;
    auto* rha = app.add_subcommand("rha", "Riemann Hypothesis Analogue report");
    rha->add_option("input", rha_in, "input document")->required();
    rha->add_option("--tol", rha_tol, "relative tolerance on root magnitudes");
    rha->add_option("--tail", rha_tail, "vanishing tail length for polynomial detection");
    rha->add_option("-D,--order", rha_order, "truncation order");

    std::string count_in;
    std::size_t count_r = 3;
    auto* count = app.add_subcommand("count", "brute-force point counts N_1..N_r");
    count->add_option("curve", count_in, "curve document")->required();
    count->add_option("-r", count_r, "largest extension degree");

    std::string restrict_in, restrict_out;
    std::size_t restrict_r = 1;
    auto* restr = app.add_subcommand("restrict", "restrict a spectrum to the subgroup generated by phi^r");
    restr->add_option("spectrum", restrict_in, "spectrum document")->required();
    restr->add_option("-r", restrict_r, "power of phi")->required();
    restr->add_option("-o,--output", restrict_out, "write the result here instead of stdout");

    std::string cover_in;
    std::size_t cover_r = 4;
    auto* cover = app.add_subcommand("cover", "quotient, inertia and fixed-point identity checks on a model");
    cover->add_option("model", cover_in, "model document")->required();
    cover->add_option("-r", cover_r, "largest power of phi");

    for (auto* sub : {zeta, rha, count, restr, cover})
        sub->add_option("--format", format_name, "output format: text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Format format = parse_format(format_name);
        const std::uint64_t budget = budget_from_env();
        if (zeta->parsed()) {
            std::vector<std::string> given;
            for (const auto* p : {&zeta_input, &zeta_curve, &zeta_spectrum, &zeta_fixed})
                if (!p->empty())
                    given.push_back(*p);
            if (given.size() != 1)
                throw Error(ErrorKind::BadParameters, "zeta takes exactly one input");
            const Document doc = load_document(given.front());
            if (!zeta_curve.empty())
                expect<CurveModel>(doc, "a curve");
            if (!zeta_spectrum.empty())
                expect<OrbitSpectrum>(doc, "a spectrum");
            if (!zeta_fixed.empty())
                expect<FixedPointTable>(doc, "fixed points");
            return cmd_zeta(doc, zeta_order, format, out, budget);
        }
        if (rha->parsed())
            return cmd_rha(load_document(rha_in), rha_tol, rha_tail, rha_order, format, out, budget);
        if (count->parsed())
            return cmd_count(expect<CurveModel>(load_document(count_in), "a curve"), count_r, format, out, budget);
        if (restr->parsed()) {
            const Document doc = load_document(restrict_in);
            const OrbitSpectrum& s = expect<OrbitSpectrum>(doc, "a spectrum");
            if (restrict_out.empty())
                return cmd_restrict(s, restrict_r, out);
            std::ofstream file(restrict_out, std::ios::binary);
            if (!file)
                throw Error(ErrorKind::BadParameters, "cannot write " + restrict_out);
            return cmd_restrict(s, restrict_r, file);
        }
        if (cover->parsed())
            return cmd_cover(expect<ModelDocument>(load_document(cover_in), "a model"), cover_r, format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kUsage;
}

} // namespace zetamod::cli
