#include "scfact/json_io.hpp"

#include <fstream>
#include <sstream>

namespace scfact {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError(path + ": " + msg, 0);
}

/// Schema validation rejects unknown fields.
void check_fields(const Json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* name : allowed)
            if (item.key() == name) known = true;
        if (!known) fail(path, "unknown field \"" + item.key() + "\"");
    }
}

const Json& require(const Json& j, const std::string& path, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) fail(path, std::string("missing field \"") + field + "\"");
    return *it;
}

long long require_int(const Json& j, const std::string& path, const char* field) {
    const Json& v = require(j, path, field);
    if (!v.is_number_integer()) fail(path, std::string("\"") + field + "\" must be an integer");
    return v.get<long long>();
}

BigRat parse_big_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return BigRat(j.get<long long>());
    if (j.is_string()) {
        try {
            return BigRat(j.get<std::string>());
        } catch (const std::exception&) {
            fail(path, "not a rational literal: \"" + j.get<std::string>() + "\"");
        }
    }
    fail(path, "expected an integer or a rational string");
}

RingValue value_from_json_at(const Json& j, const RingDescriptor& ring,
                             const std::string& path) {
    switch (ring.kind()) {
    case RingKind::BigInteger: {
        BigRat r = parse_big_rational(j, path);
        if (denominator(r) != 1) fail(path, "not an integer: " + j.dump());
        return RingValue::make_integer(ring, numerator(r));
    }
    case RingKind::Rational:
        return RingValue::make_rational(ring, parse_big_rational(j, path));
    case RingKind::Modular: {
        if (!j.is_number_integer()) fail(path, "modular values are integers");
        return from_int(ring, j.get<long long>());
    }
    case RingKind::QuadraticExt: {
        check_fields(j, path, {"p", "q"});
        return RingValue::make_quadratic(ring, parse_big_rational(require(j, path, "p"), path),
                                         parse_big_rational(require(j, path, "q"), path));
    }
    case RingKind::BooleanSet: {
        if (!j.is_array()) fail(path, "boolean-set values are element lists");
        std::uint64_t bits = 0;
        for (const auto& e : j) {
            if (!e.is_number_integer()) fail(path, "set elements are integers");
            long long el = e.get<long long>(); // elements are labeled 1..universe_size
            if (el < 1 || el > ring.universe_size())
                fail(path, "element " + std::to_string(el) + " outside the universe");
            bits |= (std::uint64_t{1} << (el - 1));
        }
        return RingValue::make_boolean(ring, bits);
    }
    case RingKind::Sampled: {
        if (!j.is_array() || j.size() != ring.grid().size())
            fail(path, "expected " + std::to_string(ring.grid().size()) + " samples");
        std::vector<double> s;
        for (const auto& e : j) {
            if (!e.is_number()) fail(path, "samples are numbers");
            s.push_back(e.get<double>());
        }
        return RingValue::make_samples(ring, std::move(s));
    }
    case RingKind::RealFloat:
        if (!j.is_number()) fail(path, "expected a number");
        return RingValue::make_real(ring, j.get<double>());
    }
    fail(path, "unsupported ring kind");
}

CoefficientSequence sequence_from_json_at(const Json& j, const RingDescriptor& ring,
                                          const std::string& path) {
    const Json& kind_j = require(j, path, "kind");
    if (!kind_j.is_string()) fail(path, "\"kind\" must be a string");
    std::string kind = kind_j.get<std::string>();

    auto read_values = [&](const char* field) {
        const Json& arr = require(j, path, field);
        if (!arr.is_array() || arr.empty()) fail(path, std::string(field) + " must be a nonempty array");
        std::vector<RingValue> out;
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(value_from_json_at(arr[i], ring,
                                             path + "." + field + "[" + std::to_string(i) + "]"));
        return out;
    };

    if (kind == "constant") {
        check_fields(j, path, {"kind", "value"});
        return CoefficientSequence::constant(
            value_from_json_at(require(j, path, "value"), ring, path + ".value"));
    }
    if (kind == "periodic") {
        check_fields(j, path, {"kind", "period", "offset", "values"});
        auto values = read_values("values");
        if (j.contains("period") &&
            require_int(j, path, "period") != static_cast<long long>(values.size()))
            fail(path, "period does not match the number of values");
        long long offset = j.contains("offset") ? require_int(j, path, "offset") : 0;
        return CoefficientSequence::periodic(std::move(values), offset);
    }
    if (kind == "table") {
        check_fields(j, path, {"kind", "values", "tail"});
        auto values = read_values("values");
        return CoefficientSequence::table(
            std::move(values), value_from_json_at(require(j, path, "tail"), ring, path + ".tail"));
    }
    if (kind == "formula") {
        check_fields(j, path, {"kind", "expr"});
        const Json& expr = require(j, path, "expr");
        if (!expr.is_string()) fail(path, "\"expr\" must be a string");
        return CoefficientSequence::formula(expr.get<std::string>(), ring);
    }
    fail(path, "unknown sequence kind \"" + kind + "\"");
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return Json::parse(text.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what(), e.byte);
    }
}

Json ring_to_json(const RingDescriptor& ring) {
    switch (ring.kind()) {
    case RingKind::BigInteger: return {{"kind", "integers"}};
    case RingKind::Rational: return {{"kind", "rationals"}};
    case RingKind::Modular: return {{"kind", "modular"}, {"m", ring.modulus()}};
    case RingKind::QuadraticExt: return {{"kind", "quadratic_ext"}, {"d", ring.ext_d()}};
    case RingKind::BooleanSet: return {{"kind", "boolean_set"}, {"universe", ring.universe_size()}};
    case RingKind::Sampled: return {{"kind", "sampled"}, {"grid", ring.grid()}, {"tol", ring.tolerance()}};
    case RingKind::RealFloat: return {{"kind", "real_float"}, {"tol", ring.tolerance()}};
    }
    throw Error("unsupported ring kind");
}

RingDescriptor ring_from_json(const Json& j) {
    const std::string path = "ring";
    const Json& kind_j = require(j, path, "kind");
    if (!kind_j.is_string()) fail(path, "\"kind\" must be a string");
    std::string kind = kind_j.get<std::string>();
    if (kind == "integers") {
        check_fields(j, path, {"kind"});
        return RingDescriptor::integers();
    }
    if (kind == "rationals") {
        check_fields(j, path, {"kind"});
        return RingDescriptor::rationals();
    }
    if (kind == "modular") {
        check_fields(j, path, {"kind", "m"});
        return RingDescriptor::modular(require_int(j, path, "m"));
    }
    if (kind == "quadratic_ext") {
        check_fields(j, path, {"kind", "d"});
        return RingDescriptor::quadratic_ext(require_int(j, path, "d"));
    }
    if (kind == "boolean_set") {
        check_fields(j, path, {"kind", "universe"});
        long long u = j.contains("universe") ? require_int(j, path, "universe") : 16;
        return RingDescriptor::boolean_set(static_cast<int>(u));
    }
    if (kind == "sampled") {
        check_fields(j, path, {"kind", "grid", "tol"});
        const Json& grid_j = require(j, path, "grid");
        if (!grid_j.is_array() || grid_j.empty()) fail(path, "\"grid\" must be a nonempty array");
        std::vector<double> grid;
        for (const auto& e : grid_j) {
            if (!e.is_number()) fail(path, "grid points are numbers");
            grid.push_back(e.get<double>());
        }
        double tol = j.contains("tol") ? require(j, path, "tol").get<double>() : 1e-12;
        return RingDescriptor::sampled(std::move(grid), tol);
    }
    if (kind == "real_float") {
        check_fields(j, path, {"kind", "tol"});
        double tol = j.contains("tol") ? require(j, path, "tol").get<double>() : 1e-12;
        return RingDescriptor::real_float(tol);
    }
    fail(path, "unknown ring kind \"" + kind + "\"");
}

Json value_to_json(const RingValue& v) {
    switch (v.ring().kind()) {
    case RingKind::BigInteger: {
        const BigInt& z = v.as_integer();
        if (z >= std::numeric_limits<long long>::min() &&
            z <= std::numeric_limits<long long>::max())
            return static_cast<long long>(z);
        return z.str();
    }
    case RingKind::Rational: return to_string(v);
    case RingKind::Modular: return v.as_residue();
    case RingKind::QuadraticExt:
        return {{"p", v.as_quadratic().p.str()}, {"q", v.as_quadratic().q.str()}};
    case RingKind::BooleanSet: {
        Json arr = Json::array();
        for (int e = 0; e < v.ring().universe_size(); ++e)
            if (v.as_bits() & (std::uint64_t{1} << e)) arr.push_back(e + 1);
        return arr;
    }
    case RingKind::Sampled: return v.as_samples();
    case RingKind::RealFloat: return v.as_real();
    }
    throw Error("unsupported ring kind");
}

RingValue value_from_json(const Json& j, const RingDescriptor& ring) {
    return value_from_json_at(j, ring, "value");
}

Json sequence_to_json(const CoefficientSequence& s, long long callback_horizon) {
    switch (s.kind()) {
    case CoefficientSequence::Kind::Constant:
        return {{"kind", "constant"}, {"value", value_to_json(s.tail())}};
    case CoefficientSequence::Kind::Periodic: {
        Json values = Json::array();
        for (const auto& v : s.values()) values.push_back(value_to_json(v));
        return {{"kind", "periodic"}, {"period", s.period()}, {"offset", s.offset()},
                {"values", values}};
    }
    case CoefficientSequence::Kind::Table: {
        Json values = Json::array();
        for (const auto& v : s.values()) values.push_back(value_to_json(v));
        return {{"kind", "table"}, {"values", values}, {"tail", value_to_json(s.tail())}};
    }
    case CoefficientSequence::Kind::Formula:
        return {{"kind", "formula"}, {"expr", s.formula_text()}};
    case CoefficientSequence::Kind::Callback: {
        Json values = Json::array();
        for (long long n = 0; n < callback_horizon; ++n)
            values.push_back(value_to_json(s.eval(n)));
        return {{"kind", "table"}, {"values", values},
                {"tail", value_to_json(s.eval(callback_horizon))}};
    }
    }
    throw Error("unsupported sequence kind");
}

CoefficientSequence sequence_from_json(const Json& j, const RingDescriptor& ring) {
    return sequence_from_json_at(j, ring, "sequence");
}

Json recurrence_to_json(const LinearRecurrence& rec) {
    Json coeffs = Json::array();
    for (const auto& c : rec.coeffs()) coeffs.push_back(sequence_to_json(c));
    Json initials = Json::array();
    for (const auto& v : rec.initials()) initials.push_back(value_to_json(v));
    return {{"ring", ring_to_json(rec.ring())},
            {"order", rec.order()},
            {"coeffs", coeffs},
            {"forcing", sequence_to_json(rec.forcing())},
            {"initials", initials},
            {"start_index", rec.start_index()}};
}

LinearRecurrence recurrence_from_json(const Json& j) {
    const std::string path = "recurrence";
    check_fields(j, path, {"ring", "order", "coeffs", "forcing", "initials", "start_index"});
    RingDescriptor ring = ring_from_json(require(j, path, "ring"));

    const Json& coeffs_j = require(j, path, "coeffs");
    if (!coeffs_j.is_array() || coeffs_j.empty()) fail(path, "\"coeffs\" must be a nonempty array");
    std::vector<CoefficientSequence> coeffs;
    for (std::size_t i = 0; i < coeffs_j.size(); ++i)
        coeffs.push_back(sequence_from_json_at(coeffs_j[i], ring,
                                               path + ".coeffs[" + std::to_string(i) + "]"));
    if (j.contains("order") &&
        require_int(j, path, "order") != static_cast<long long>(coeffs.size()))
        fail(path, "order does not match the number of coefficient sequences");

    CoefficientSequence forcing =
        j.contains("forcing")
            ? sequence_from_json_at(*j.find("forcing"), ring, path + ".forcing")
            : CoefficientSequence::constant(ring_zero(ring));

    const Json& init_j = require(j, path, "initials");
    if (!init_j.is_array()) fail(path, "\"initials\" must be an array");
    std::vector<RingValue> initials;
    for (std::size_t i = 0; i < init_j.size(); ++i)
        initials.push_back(value_from_json_at(init_j[i], ring,
                                              path + ".initials[" + std::to_string(i) + "]"));
    if (initials.size() != coeffs.size())
        fail(path, "expected " + std::to_string(coeffs.size()) + " initial values");

    long long start = j.contains("start_index") ? require_int(j, path, "start_index") : 0;
    return LinearRecurrence(ring, std::move(coeffs), std::move(forcing), std::move(initials),
                            start);
}

Json factorization_to_json(const ScFactorization& f, long long alpha_terms) {
    Json t_init = Json::array();
    for (const auto& v : f.t_initials) t_init.push_back(value_to_json(v));
    bool constant = f.alpha.source() == Eigensequence::Source::Eigenvalue;
    Json alpha = Json::array();
    for (long long n = 1; n <= (constant ? 1 : alpha_terms); ++n)
        alpha.push_back(value_to_json(f.alpha.term(n)));
    Json out = {{"original", recurrence_to_json(f.original)},
                {"alpha", {{"constant", constant}, {"terms", alpha}}},
                {"t_initials", t_init}};
    out["factor"] = f.factor ? recurrence_to_json(*f.factor) : Json(nullptr);
    return out;
}

ScFactorization factorization_from_json(const Json& j) {
    const std::string path = "factorization";
    check_fields(j, path, {"original", "alpha", "t_initials", "factor"});
    LinearRecurrence original = recurrence_from_json(require(j, path, "original"));
    const Json& alpha_j = require(j, path, "alpha");
    check_fields(alpha_j, path + ".alpha", {"constant", "terms"});
    const Json& terms_j = require(alpha_j, path + ".alpha", "terms");
    if (!terms_j.is_array() || terms_j.empty())
        fail(path + ".alpha", "\"terms\" must be a nonempty array");
    std::vector<RingValue> terms;
    for (std::size_t i = 0; i < terms_j.size(); ++i)
        terms.push_back(value_from_json_at(terms_j[i], original.ring(),
                                           path + ".alpha.terms[" + std::to_string(i) + "]"));
    const Json& constant_j = require(alpha_j, path + ".alpha", "constant");
    if (!constant_j.is_boolean()) fail(path + ".alpha", "\"constant\" must be a boolean");
    Eigensequence alpha = constant_j.get<bool>()
                              ? Eigensequence::eigenvalue(terms.front())
                              : Eigensequence::user_supplied(std::move(terms), false);
    return sc_factorize(original, alpha); // re-verifies the multiplier
}

Json periodic_search_to_json(const PeriodicSearch& s) {
    Json out;
    out["quadratic"] = {{"a2", value_to_json(s.quadratic.a2)},
                        {"a1", value_to_json(s.quadratic.a1)},
                        {"a0", value_to_json(s.quadratic.a0)}};
    out["degenerate"] = s.degenerate;
    out["extension"] = s.extension ? ring_to_json(*s.extension) : Json(nullptr);
    Json results = Json::array();
    for (const auto& r : s.results) {
        Json item = {{"r1", value_to_json(r.r1)},
                     {"terms", terms_to_json(r.terms)},
                     {"closes", r.closes},
                     {"unitary", r.unitary},
                     {"success", r.success},
                     {"l_witness", terms_to_json(r.l_witness)},
                     {"l_witness_ok", r.l_witness_ok}};
        if (!r.success) item["failure"] = r.failure;
        results.push_back(item);
    }
    out["results"] = results;
    return out;
}

Json terms_to_json(const std::vector<RingValue>& terms) {
    Json arr = Json::array();
    for (const auto& v : terms) arr.push_back(value_to_json(v));
    return arr;
}

std::string terms_to_csv(const std::vector<RingValue>& terms, long long first_index) {
    std::string out = "n,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
        out += std::to_string(first_index + static_cast<long long>(i)) + "," +
               to_string(terms[i]) + "\n";
    return out;
}

} // namespace scfact
