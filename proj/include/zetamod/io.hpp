#pragma once

// One JSON document format for every input kind, selected by a top-level
// "kind" tag. Integers that do not fit in 64 bits may be written as strings.
// Serialization is deterministic: key order is fixed and output ends in a
// newline, so a document written here reads back and re-serializes
// byte-identically.

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "covmodel.hpp"
#include "exactcore.hpp"
#include "ffgeom.hpp"
#include "spectrum.hpp"
#include "zetafn.hpp"

namespace zetamod {

struct NonprojectiveParams {
    BigInt q;
    std::size_t m = 1;
    std::size_t d = 0;
    std::size_t horizon = 0;
};

struct ModelDocument {
    GroupAction action;
    std::optional<std::vector<Permutation>> subgroup_generators;
    BigInt base_q = 2;
};

/// A parsed input. projective_line and nonprojective documents are expanded
/// into spectra; their parameters are kept for reporting.
struct Document {
    std::string kind;
    std::variant<OrbitSpectrum, FixedPointTable, CurveModel, ModelDocument, QuotientPoly> value;
    std::optional<NonprojectiveParams> nonprojective;
};

namespace detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline BigInt json_bigint(const json& j, const std::string& what)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            parse_fail(what + ": \"" + s + "\" is not an integer");
        return BigInt(s);
    }
    parse_fail(what + " must be an integer");
}

inline std::uint64_t json_u64(const json& j, const std::string& what)
{
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        parse_fail(what + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

inline long long json_i64(const json& j, const std::string& what)
{
    if (!j.is_number_integer())
        parse_fail(what + " must be an integer");
    return j.get<long long>();
}

inline json bigint_json(const BigInt& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

inline Permutation json_permutation(const json& j, const std::string& what)
{
    if (!j.is_array())
        parse_fail(what + " must be a list of images");
    Permutation p;
    for (const auto& v : j)
        p.push_back(static_cast<std::size_t>(json_u64(v, what)));
    return p;
}

inline OrbitSpectrum parse_spectrum(const json& j)
{
    const BigInt q = json_bigint(require(j, "base_q"), "base_q");
    const std::size_t horizon = json_u64(require(j, "horizon"), "horizon");
    const json& complete = require(j, "complete");
    if (!complete.is_boolean())
        parse_fail("complete must be true or false");
    const json& counts = require(j, "counts");
    if (!counts.is_array())
        parse_fail("counts must be a list of [k, B_k] pairs");
    std::vector<BigInt> b(horizon);
    for (const auto& entry : counts) {
        if (!entry.is_array() || entry.size() != 2)
            parse_fail("counts entries are [k, B_k] pairs");
        const std::size_t k = json_u64(entry[0], "k");
        if (k < 1 || k > horizon)
            parse_fail("orbit degree " + std::to_string(k) + " outside 1..horizon");
        b[k - 1] = json_bigint(entry[1], "B_k");
    }
    return OrbitSpectrum(q, std::move(b), complete.get<bool>());
}

inline FixedPointTable parse_fixed_points(const json& j)
{
    FixedPointTable t;
    t.base_q = json_bigint(require(j, "base_q"), "base_q");
    const json& values = require(j, "values");
    if (!values.is_array())
        parse_fail("values must be a list");
    for (const auto& v : values)
        t.values.push_back(json_bigint(v, "N_r"));
    return t;
}

inline CurveKind parse_curve_kind(const std::string& s)
{
    if (s == "smooth_plane")
        return CurveKind::SmoothPlane;
    if (s == "weierstrass")
        return CurveKind::Weierstrass;
    if (s == "custom")
        return CurveKind::Custom;
    parse_fail("unknown curve_type \"" + s + "\"");
}

inline CurveModel parse_curve(const json& j)
{
    const std::uint64_t p = json_u64(require(j, "p"), "p");
    const std::uint64_t e = j.contains("e") ? json_u64(j.at("e"), "e") : 1;
    FqField field = [&] {
        if (!j.contains("modulus"))
            return build_field(p, e);
        std::vector<std::uint64_t> mod;
        for (const auto& c : j.at("modulus"))
            mod.push_back(json_u64(c, "modulus coefficient"));
        return build_field(p, e, mod);
    }();
    const unsigned degree = static_cast<unsigned>(json_u64(require(j, "degree"), "degree"));
    const json& monos = require(j, "monomials");
    if (!monos.is_array())
        parse_fail("monomials must be a list of [i, j, k, coeff]");
    std::vector<Monomial> terms;
    for (const auto& m : monos) {
        if (!m.is_array() || m.size() != 4)
            parse_fail("monomials are [i, j, k, coeff]");
        Monomial t;
        t.i = static_cast<unsigned>(json_u64(m[0], "exponent"));
        t.j = static_cast<unsigned>(json_u64(m[1], "exponent"));
        t.k = static_cast<unsigned>(json_u64(m[2], "exponent"));
        if (m[3].is_array()) {
            // digits c_0, c_1, ... of the residue polynomial
            std::vector<std::uint64_t> digits;
            for (const auto& c : m[3])
                digits.push_back(static_cast<std::uint64_t>(field.from_integer(json_i64(c, "coefficient digit"))));
            if (digits.size() > e)
                parse_fail("coefficient has more than e digits");
            t.coeff = field.from_digits(digits);
        } else {
            t.coeff = field.from_integer(json_i64(m[3], "coefficient"));
        }
        terms.push_back(t);
    }
    const CurveKind kind = parse_curve_kind(require(j, "curve_type").get<std::string>());
    std::optional<unsigned> genus;
    if (j.contains("genus"))
        genus = static_cast<unsigned>(json_u64(j.at("genus"), "genus"));
    return CurveModel(std::move(field), degree, std::move(terms), kind, genus);
}

inline ModelDocument parse_model(const json& j)
{
    const Permutation phi = json_permutation(require(j, "phi"), "phi");
    if (j.contains("n") && json_u64(j.at("n"), "n") != phi.size())
        parse_fail("n does not match the length of phi");
    std::vector<Permutation> gens;
    if (j.contains("generators"))
        for (const auto& g : j.at("generators"))
            gens.push_back(json_permutation(g, "generator"));
    ModelDocument doc{GroupAction(FiniteOrbitModel(phi), std::move(gens)), std::nullopt, 2};
    if (j.contains("subgroup_generators")) {
        std::vector<Permutation> sub;
        for (const auto& g : j.at("subgroup_generators"))
            sub.push_back(json_permutation(g, "subgroup generator"));
        doc.subgroup_generators = std::move(sub);
    }
    if (j.contains("base_q"))
        doc.base_q = json_bigint(j.at("base_q"), "base_q");
    return doc;
}

inline QuotientPoly parse_quotient(const json& j)
{
    const BigInt q = json_bigint(require(j, "q"), "q");
    if (!is_prime_power(q))
        throw Error(ErrorKind::NotPrimePower, "q = " + q.str() + " is not a prime power");
    std::vector<BigInt> c;
    for (const auto& v : require(j, "coeffs"))
        c.push_back(json_bigint(v, "coefficient"));
    return QuotientPoly(IntPoly(std::move(c)), q);
}

} // namespace detail

inline Document parse_document(const std::string& text)
{
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const detail::json::exception& e) {
        detail::parse_fail(e.what());
    }
    try {
        const detail::json& kind_field = detail::require(j, "kind");
        if (!kind_field.is_string())
            detail::parse_fail("kind must be a string");
        Document doc;
        doc.kind = kind_field.get<std::string>();
        if (doc.kind == "spectrum") {
            doc.value = detail::parse_spectrum(j);
        } else if (doc.kind == "fixed_points") {
            doc.value = detail::parse_fixed_points(j);
        } else if (doc.kind == "curve") {
            doc.value = detail::parse_curve(j);
        } else if (doc.kind == "model") {
            doc.value = detail::parse_model(j);
        } else if (doc.kind == "quotient") {
            doc.value = detail::parse_quotient(j);
        } else if (doc.kind == "projective_line") {
            doc.value = projective_line_spectrum(detail::json_bigint(detail::require(j, "q"), "q"),
                                                 detail::json_u64(detail::require(j, "horizon"), "horizon"));
        } else if (doc.kind == "nonprojective") {
            NonprojectiveParams np;
            np.q = detail::json_bigint(detail::require(j, "q"), "q");
            np.m = detail::json_u64(detail::require(j, "m"), "m");
            np.d = detail::json_u64(detail::require(j, "d"), "d");
            np.horizon = detail::json_u64(detail::require(j, "horizon"), "horizon");
            doc.value = nonprojective_module(np.q, np.m, np.d, np.horizon);
            doc.nonprojective = np;
        } else {
            detail::parse_fail("unknown kind \"" + doc.kind + "\"");
        }
        return doc;
    } catch (const detail::json::exception& e) {
        detail::parse_fail(e.what());
    }
}

inline Document load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

/// Top-level keys one per line; a list of lists gets one inner list per line.
inline std::string dump_document(const detail::json& j)
{
    std::ostringstream os;
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << "  " << detail::json(it.key()).dump() << ": ";
        const auto& v = it.value();
        const bool nested = v.is_array() && !v.empty() && v.front().is_array();
        if (!nested) {
            os << v.dump();
        } else {
            os << "[\n";
            for (std::size_t k = 0; k < v.size(); ++k)
                os << "    " << v[k].dump() << (k + 1 < v.size() ? ",\n" : "\n");
            os << "  ]";
        }
        os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << "}\n";
    return os.str();
}

/// Only non-zero counts are written.
inline std::string serialize_spectrum(const OrbitSpectrum& s)
{
    detail::json j;
    j["kind"] = "spectrum";
    j["base_q"] = detail::bigint_json(s.base_q);
    j["horizon"] = s.horizon;
    j["complete"] = s.complete;
    detail::json counts = detail::json::array();
    for (std::size_t k = 1; k <= s.horizon; ++k)
        if (s.counts[k - 1] != 0)
            counts.push_back(detail::json::array({k, detail::bigint_json(s.counts[k - 1])}));
    j["counts"] = counts;
    return dump_document(j);
}

inline std::string serialize_fixed_points(const FixedPointTable& t)
{
    detail::json j;
    j["kind"] = "fixed_points";
    j["base_q"] = detail::bigint_json(t.base_q);
    detail::json values = detail::json::array();
    for (const auto& v : t.values)
        values.push_back(detail::bigint_json(v));
    j["values"] = values;
    return dump_document(j);
}

inline std::string serialize_quotient(const QuotientPoly& p)
{
    detail::json j;
    j["kind"] = "quotient";
    j["q"] = detail::bigint_json(p.q);
    detail::json coeffs = detail::json::array();
    for (const auto& c : p.poly.coeffs())
        coeffs.push_back(detail::bigint_json(c));
    j["coeffs"] = coeffs;
    return dump_document(j);
}

} // namespace zetamod
