#include "scfact/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "scfact/closed_form.hpp"
#include "scfact/json_io.hpp"

namespace scfact {

namespace {

/// Input problems that cannot be executed (bad schema, bad routing, horizon
/// over the cap). Mapped to exit code 2, like ParseError.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct Options {
    std::string ring_file;
    std::string inline_json;
    long long horizon = -1; // -1: not set on the command line
    std::vector<std::string> seeds;
    std::string format = "table";
    double tolerance = 1e-9;
    bool verify = true;
};

long long max_terms_cap() {
    if (const char* env = std::getenv("SCFACT_MAX_TERMS")) {
        long long cap = std::atoll(env);
        if (cap <= 0) throw ValidationError("SCFACT_MAX_TERMS must be a positive integer");
        return cap;
    }
    return 10000;
}

const std::initializer_list<const char*> problem_fields = {
    "recurrence", "ring", "c", "d", "t1", "seeds", "horizon",
    "tolerance", "format", "limits", "tail_window"};

Json load_problem(const Options& opt) {
    if (opt.ring_file.empty() == opt.inline_json.empty())
        throw ValidationError("provide exactly one of --ring-file or --inline-json");
    Json problem = opt.ring_file.empty() ? parse_json_text(opt.inline_json)
                                         : load_json_file(opt.ring_file);
    if (!problem.is_object()) throw ParseError("problem: expected a JSON object", 0);
    for (const auto& item : problem.items()) {
        bool known = false;
        for (const char* f : problem_fields)
            if (item.key() == f) known = true;
        if (!known) throw ParseError("problem: unknown field \"" + item.key() + "\"", 0);
    }
    return problem;
}

long long resolve_horizon(const Options& opt, const Json& problem, long long fallback) {
    long long h = fallback;
    if (problem.contains("horizon")) h = problem["horizon"].get<long long>();
    if (opt.horizon >= 0) h = opt.horizon;
    if (h < 0) throw ValidationError("horizon must be nonnegative");
    long long cap = max_terms_cap();
    if (h > cap)
        throw ValidationError("horizon " + std::to_string(h) + " exceeds SCFACT_MAX_TERMS (" +
                              std::to_string(cap) + ")");
    return h;
}

std::string resolve_format(const Options& opt, const Json& problem, bool format_set) {
    if (format_set) return opt.format;
    if (problem.contains("format")) {
        std::string f = problem["format"].get<std::string>();
        if (f != "csv" && f != "json" && f != "table")
            throw ParseError("problem.format: expected csv, json or table", 0);
        return f;
    }
    return opt.format;
}

LinearRecurrence problem_recurrence(const Json& problem) {
    if (!problem.contains("recurrence")) {
        if (problem.contains("c"))
            throw ValidationError("this problem defines a nonrecursive equation; "
                                  "use the nonrecursive command");
        throw ParseError("problem: missing field \"recurrence\"", 0);
    }
    return recurrence_from_json(problem["recurrence"]);
}

std::vector<RingValue> resolve_seeds(const Options& opt, const Json& problem,
                                     const RingDescriptor& ring) {
    std::vector<RingValue> seeds;
    if (!opt.seeds.empty()) {
        for (const auto& s : opt.seeds) seeds.push_back(value_from_json(parse_json_text(s), ring));
    } else if (problem.contains("seeds")) {
        for (const auto& s : problem["seeds"]) seeds.push_back(value_from_json(s, ring));
    }
    return seeds;
}

void print_terms(std::ostream& out, const std::vector<RingValue>& terms, long long first_index,
                 const std::string& format) {
    if (format == "csv") {
        out << terms_to_csv(terms, first_index);
    } else if (format == "json") {
        out << terms_to_json(terms).dump() << "\n";
    } else {
        out << "n\tvalue\n";
        for (std::size_t i = 0; i < terms.size(); ++i)
            out << first_index + static_cast<long long>(i) << "\t" << to_string(terms[i]) << "\n";
    }
}

// -- commands ---------------------------------------------------------------

int cmd_solve(const Options& opt, const Json& problem, bool format_set, std::ostream& out) {
    if (problem.contains("c") && !problem.contains("recurrence")) {
        RingDescriptor ring = ring_from_json(problem.at("ring"));
        RingValue c = value_from_json(problem.at("c"), ring);
        if (classify_element(c) != ElementClass::Unit)
            throw ValidationError("leading coefficient not a unit; use nonrecursive command");
        throw ValidationError("this problem defines a nonrecursive equation; "
                              "use the nonrecursive command");
    }
    LinearRecurrence rec = problem_recurrence(problem);
    long long horizon = resolve_horizon(opt, problem, 20);
    print_terms(out, iterate(rec, horizon).prefix(horizon), 0,
                resolve_format(opt, problem, format_set));
    return 0;
}

int cmd_eigenseq(const Options& opt, const Json& problem, bool format_set, std::ostream& out) {
    LinearRecurrence rec = problem_recurrence(problem);
    auto seeds = resolve_seeds(opt, problem, rec.ring());
    if (static_cast<long long>(seeds.size()) != rec.k())
        throw ValidationError("expected " + std::to_string(rec.k()) + " seed value(s), got " +
                              std::to_string(seeds.size()));
    long long horizon = resolve_horizon(opt, problem, 20);
    auto e = Eigensequence::from_seed(rec, seeds);
    auto terms = e.prefix(horizon);
    auto cls = classify_eigenseq(e, horizon);
    std::string format = resolve_format(opt, problem, format_set);
    if (format == "json") {
        Json j = {{"terms", terms_to_json(terms)},
                  {"classification",
                   {{"verdict", to_string(cls.verdict)},
                    {"witness_index", cls.witness_index},
                    {"witness_class", to_string(cls.witness_class)}}}};
        out << j.dump() << "\n";
    } else {
        print_terms(out, terms, 1, format);
        out << "classification: " << to_string(cls.verdict);
        if (cls.witness_index >= 0)
            out << " (witness at n=" << cls.witness_index << ": "
                << to_string(cls.witness_class) << ")";
        out << "\n";
    }
    return 0;
}

int cmd_factorize(const Options& opt, const Json& problem, bool format_set, std::ostream& out) {
    LinearRecurrence rec = problem_recurrence(problem);
    auto seeds = resolve_seeds(opt, problem, rec.ring());
    Eigensequence alpha = [&] {
        if (!seeds.empty()) {
            if (static_cast<long long>(seeds.size()) != rec.k())
                throw ValidationError("expected " + std::to_string(rec.k()) + " seed value(s)");
            return Eigensequence::from_seed(rec, seeds);
        }
        auto ev = eigenvalues_constant(rec);
        for (const auto& v : ev.values)
            if (classify_element(v) == ElementClass::Unit) return Eigensequence::eigenvalue(v);
        throw Error("no unit eigenvalue found; supply --seed values" +
                    (ev.note.empty() ? "" : " (" + ev.note + ")"));
    }();
    auto f = sc_factorize(rec, alpha);
    long long horizon = resolve_horizon(opt, problem, 20);
    std::string verdict = "ok";
    std::string detail;
    try {
        solve_via_factorization(f, horizon);
    } catch (const Error& e) {
        verdict = "failed";
        detail = e.what();
    }
    std::string format = resolve_format(opt, problem, format_set);
    if (format == "json") {
        Json j = factorization_to_json(f, std::max<long long>(horizon, 2));
        j["oracle_equivalence"] = {{"verdict", verdict}, {"horizon", horizon}};
        if (!detail.empty()) j["oracle_equivalence"]["detail"] = detail;
        out << j.dump() << "\n";
    } else {
        out << "multiplier alpha (first terms): ";
        for (long long n = 1; n <= std::min<long long>(horizon, 8); ++n)
            out << (n > 1 ? "," : "") << to_string(f.alpha.term(n));
        out << "\n";
        if (f.factor) {
            out << "factor order: " << f.factor->order() << "\n";
            out << "t initials: " << terms_to_json(f.t_initials).dump() << "\n";
        }
        out << "oracle-equivalence: " << verdict << " (n <= " << horizon << ")";
        if (!detail.empty()) out << " " << detail;
        out << "\n";
    }
    if (verdict != "ok") throw VerificationFailure(detail);
    return 0;
}

int cmd_periodic(const Options& opt, const Json& problem, bool format_set, std::ostream& out) {
    LinearRecurrence rec = problem_recurrence(problem);
    if (rec.order() != 2)
        throw ValidationError("periodic eigensequence search requires an order-2 recurrence");
    auto search = find_periodic_eigenseq(rec.coeffs()[0], rec.coeffs()[1]);
    std::string format = resolve_format(opt, problem, format_set);
    if (format == "json") {
        out << periodic_search_to_json(search).dump() << "\n";
        return 0;
    }
    out << "closure quadratic (a2,a1,a0): " << to_string(search.quadratic.a2) << ","
        << to_string(search.quadratic.a1) << "," << to_string(search.quadratic.a0) << "\n";
    if (search.degenerate) {
        out << "degenerate quadratic: no period-" << search.table.p << " eigensequence\n";
        out << "hint: a seeded eigensequence may still exist; try the eigenseq command "
               "with --seed\n";
        return 0;
    }
    if (search.extension) out << "roots lifted to " << search.extension->name() << "\n";
    if (search.results.empty()) out << "no representable roots\n";
    for (const auto& r : search.results) {
        out << "r1=" << to_string(r.r1) << ": ";
        if (r.success) {
            out << "success, terms ";
            for (std::size_t i = 0; i < r.terms.size(); ++i)
                out << (i ? "," : "") << to_string(r.terms[i]);
            out << " (closes, unitary, L-witness " << (r.l_witness_ok ? "ok" : "FAILED") << ")";
        } else {
            out << "failure: " << r.failure;
        }
        out << "\n";
    }
    return 0;
}

int cmd_roots(const Options& opt, const Json& problem, bool format_set, std::ostream& out) {
    LinearRecurrence rec = problem_recurrence(problem);
    if (!rec.constant_coefficients())
        throw ValidationError("eigenvalues require constant coefficients");
    auto ev = eigenvalues_constant(rec);
    std::string format = resolve_format(opt, problem, format_set);
    if (format == "json") {
        Json j = {{"values", terms_to_json(ev.values)}, {"incomplete", ev.incomplete}};
        if (!ev.note.empty()) j["note"] = ev.note;
        j["extension"] = ev.extension ? ring_to_json(*ev.extension) : Json(nullptr);
        out << j.dump() << "\n";
        return 0;
    }
    if (ev.values.empty()) out << "no eigenvalues found\n";
    for (const auto& v : ev.values) out << "eigenvalue: " << to_string(v) << "\n";
    if (ev.extension) out << "extension: " << ev.extension->name() << "\n";
    if (!ev.note.empty()) out << "note: " << ev.note << "\n";
    if (ev.incomplete) out << "search incomplete\n";
    return 0;
}

int cmd_pp(const Options& opt, const Json& problem, bool format_set, bool tol_set,
           std::ostream& out) {
    LinearRecurrence rec = problem_recurrence(problem);
    auto seeds = resolve_seeds(opt, problem, rec.ring());
    if (static_cast<long long>(seeds.size()) != rec.k())
        throw ValidationError("expected " + std::to_string(rec.k()) + " seed value(s)");
    if (!problem.contains("limits"))
        throw ParseError("problem: missing field \"limits\" (limiting coefficients a_0..a_k)", 0);
    std::vector<double> limits;
    for (const auto& v : problem["limits"]) limits.push_back(v.get<double>());
    long long horizon = resolve_horizon(opt, problem, 50);
    long long tail_window =
        problem.contains("tail_window") ? problem["tail_window"].get<long long>() : 2;
    double tol = tol_set ? opt.tolerance
                         : (problem.contains("tolerance") ? problem["tolerance"].get<double>()
                                                          : 1e-9);
    auto report = poincare_perron_check(rec, seeds, limits, horizon, tail_window, tol);
    std::string format = resolve_format(opt, problem, format_set);
    if (format == "json") {
        Json j = {{"limiting_eigenvalues", report.limiting_eigenvalues},
                  {"tail_start", report.tail_start},
                  {"tail_samples", report.tail_samples},
                  {"converged_to",
                   report.converged_to ? Json(*report.converged_to) : Json(nullptr)},
                  {"max_deviation", report.max_deviation},
                  {"coefficient_deviation", report.coefficient_deviation}};
        out << j.dump() << "\n";
        return 0;
    }
    out << "limiting eigenvalues:";
    for (double v : report.limiting_eigenvalues) out << " " << format_double(v);
    out << "\n";
    if (report.converged_to)
        out << "converged to " << format_double(*report.converged_to) << " (max deviation "
            << format_double(report.max_deviation) << " from n=" << report.tail_start << ")\n";
    else
        out << "no convergence within tolerance (max deviation "
            << format_double(report.max_deviation) << ")\n";
    out << "coefficient deviation at tail: " << format_double(report.coefficient_deviation)
        << "\n";
    return 0;
}

int cmd_nonrecursive(const Options& opt, const Json& problem, bool format_set,
                     std::ostream& out) {
    if (!problem.contains("ring") || !problem.contains("c") || !problem.contains("d"))
        throw ParseError("problem: nonrecursive needs fields \"ring\", \"c\", \"d\"", 0);
    RingDescriptor ring = ring_from_json(problem["ring"]);
    RingValue c = value_from_json(problem["c"], ring);
    RingValue d = value_from_json(problem["d"], ring);
    std::optional<RingValue> t1;
    if (problem.contains("t1")) t1 = value_from_json(problem["t1"], ring);
    long long horizon = resolve_horizon(opt, problem, 4);
    auto res = enumerate_nonrecursive(c, d, horizon, t1);
    std::string format = resolve_format(opt, problem, format_set);
    if (format == "json") {
        Json seqs = Json::array();
        for (const auto& s : res.sequences) seqs.push_back(terms_to_json(s));
        Json j = {{"branches", seqs}, {"truncated", res.truncated}};
        j["recursive_multiplier"] =
            res.recursive_multiplier ? value_to_json(*res.recursive_multiplier) : Json(nullptr);
        out << j.dump() << "\n";
        return 0;
    }
    if (res.recursive_multiplier)
        out << "leading coefficient is a unit: collapses to t[n+1] = "
            << to_string(*res.recursive_multiplier) << " * t[n]\n";
    out << "branches: " << res.sequences.size() << (res.truncated ? " (truncated)" : "") << "\n";
    for (const auto& s : res.sequences) {
        out << "t:";
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : " ") << to_string(s[i]);
        out << "\n";
    }
    return 0;
}

// -- demos -------------------------------------------------------------------

void demo_fibonacci(std::ostream& out) {
    auto z = RingDescriptor::integers();
    LinearRecurrence fib(z,
                         {CoefficientSequence::constant(ring_one(z)),
                          CoefficientSequence::constant(ring_one(z))},
                         CoefficientSequence::constant(ring_zero(z)),
                         {ring_zero(z), ring_one(z)});
    out << terms_to_csv(iterate(fib, 10).prefix(10));
}

void demo_chebyshev(std::ostream& out) {
    out << "n,s,T_n(s)\n";
    for (double s : {0.5, 1.0, 2.0})
        for (long long n = 0; n <= 5; ++n)
            out << n << "," << format_double(s) << "," << format_double(chebyshev_T(s, n))
                << "\n";
}

void demo_bessel(std::ostream& out) {
    out << "n,s,u_n\n";
    for (double s : {0.5, 1.0, 2.0}) {
        std::vector<double> u{1.0, 1.0};
        for (long long m = 1; m < 4; ++m)
            u.push_back((2.0 * m / s) * u[static_cast<std::size_t>(m)] +
                        u[static_cast<std::size_t>(m - 1)]);
        for (long long n = 0; n <= 4; ++n)
            out << n << "," << format_double(s) << ","
                << format_double(u[static_cast<std::size_t>(n)]) << "\n";
    }
}

void demo_boolean(std::ostream& out) {
    auto bs = RingDescriptor::boolean_set(4);
    auto a = RingValue::make_boolean(bs, 0b0011);
    auto b = RingValue::make_boolean(bs, 0b0101);
    auto x0 = RingValue::make_boolean(bs, 0b1000);
    auto x1 = RingValue::make_boolean(bs, 0b0110);
    out << "x[n+1] = (a+b) x[n] - a b x[n-1] over subsets of {1,2,3,4}\n";
    out << "a=" << to_string(a) << " b=" << to_string(b) << " x0=" << to_string(x0)
        << " x1=" << to_string(x1) << "\n";
    out << "n\tx_n\n";
    for (long long n = 0; n <= 8; ++n)
        out << n << "\t" << to_string(solve_order2_ring(a, b, x0, x1, n)) << "\n";
}

void demo_z7_periodic(std::ostream& out) {
    auto z7 = RingDescriptor::modular(7);
    auto a = CoefficientSequence::periodic(
        {from_int(z7, -1), from_int(z7, -1), from_int(z7, 2)}, 1);
    auto b = CoefficientSequence::constant(ring_one(z7));
    auto search = find_periodic_eigenseq(a, b);
    out << "closure quadratic (a2,a1,a0): " << to_string(search.quadratic.a2) << ","
        << to_string(search.quadratic.a1) << "," << to_string(search.quadratic.a0) << "\n";
    out << "roots:";
    for (std::size_t i = 0; i < search.results.size(); ++i)
        out << (i ? "," : " ") << to_string(search.results[i].r1);
    out << "\n";
    const auto& r = search.results.front();
    out << "eigensequence from r1=" << to_string(r.r1) << ":";
    for (std::size_t i = 0; i < r.terms.size(); ++i)
        out << (i ? "," : " ") << to_string(r.terms[i]);
    out << " (period " << r.terms.size() << ")\n";
    RingValue prod = ring_one(z7);
    for (const auto& t : r.terms) prod = ring_mul(prod, t);
    out << "rho = -(r1 r2 r3)^-1 = " << to_string(ring_neg(ring_inverse(prod))) << "\n";

    // t-table: run the factor equation with t1 = 1 (x0 = 0, x1 = 1)
    LinearRecurrence rec(z7, {a, b}, CoefficientSequence::constant(ring_zero(z7)),
                         {ring_zero(z7), ring_one(z7)}, 1);
    auto f = sc_factorize(rec, Eigensequence::user_supplied(r.terms, true));
    auto t = iterate(*f.factor, 8).prefix(8); // t[i] = t_{i+1}, i = 0..8
    auto cell = [&](long long n) { // gamma_n * t1
        const RingValue& g = t[static_cast<std::size_t>(n - 1)];
        return values_equal(g, ring_one(z7)) ? std::string("t1") : to_string(g) + "*t1";
    };
    out << "t-table (t1 = x1 - 3*x0):\n";
    out << "j,0,1,2\n";
    for (long long row = 1; row <= 3; ++row) {
        out << "t[3j+" << row << "]";
        for (long long j = 0; j <= 2; ++j) out << "," << cell(3 * j + row);
        out << "\n";
    }
}

void demo_z8_nonrecursive(std::ostream& out) {
    auto z8 = RingDescriptor::modular(8);
    out << "4 t[n+1] + 2 t[n] = 0 over Z8: leading coefficient 4 is not a unit\n";
    out << "every {0,4} sequence solves the factor equation; cofactor x[n+1] = -x[n] + "
           "t[n+1]\n";
    auto alpha = [&](long long) { return from_int(z8, -1); };
    auto print_table = [&](int label, std::initializer_list<long long> t_vals) {
        std::vector<RingValue> t;
        for (long long v : t_vals) t.push_back(from_int(z8, v));
        // each listed sequence must actually solve 4 t[n+1] + 2 t[n] = 0
        for (std::size_t n = 0; n + 1 < t.size(); ++n)
            if (!is_zero(ring_add(ring_mul(from_int(z8, 4), t[n + 1]),
                                  ring_mul(from_int(z8, 2), t[n]))))
                throw VerificationFailure("demo t-sequence fails the factor equation");
        auto x = cofactor_reconstruct(t, alpha, from_int(z8, 1),
                                      static_cast<long long>(t.size()));
        out << "table " << label << " (x0=1, x1=3, t1=4):\n";
        out << "n,t,x\n";
        for (std::size_t n = 1; n <= t.size(); ++n)
            out << n << "," << to_string(t[n - 1]) << "," << to_string(x[n]) << "\n";
    };
    print_table(1, {4, 4, 4, 4, 4, 0, 0, 0, 0, 0, 4, 4, 4, 4, 4});
    print_table(2, {4, 0, 4, 0, 0, 4, 0, 0, 0, 4, 0, 0, 0, 0, 4});

    auto z9 = RingDescriptor::modular(9);
    auto res = enumerate_nonrecursive(from_int(z9, 4), from_int(z9, 2), 2, from_int(z9, 1));
    out << "Z9 variant: 4 is a unit, branching collapses; recursive multiplier "
        << to_string(*res.recursive_multiplier) << " (= -2*7 mod 9)\n";
}

int cmd_demo(const std::string& name, std::ostream& out) {
    if (name == "fibonacci") demo_fibonacci(out);
    else if (name == "chebyshev") demo_chebyshev(out);
    else if (name == "bessel") demo_bessel(out);
    else if (name == "z7-periodic") demo_z7_periodic(out);
    else if (name == "z8-nonrecursive") demo_z8_nonrecursive(out);
    else if (name == "boolean") demo_boolean(out);
    else
        throw ValidationError("unknown demo \"" + name +
                              "\"; available: fibonacci, chebyshev, bessel, z7-periodic, "
                              "z8-nonrecursive, boolean");
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"eigensequences and semiconjugate factorizations of linear "
                 "difference equations over concrete rings"};
    app.require_subcommand(1);

    Options opt;
    std::string demo_name;
    app.add_option("--ring-file", opt.ring_file, "problem file (JSON)");
    app.add_option("--inline-json", opt.inline_json, "problem JSON given inline");
    app.add_option("--horizon", opt.horizon, "number of terms to compute");
    app.add_option("--seed", opt.seeds, "eigensequence seed value (repeatable, JSON literal)");
    auto* format_opt = app.add_option("--format", opt.format, "output format")
                           ->check(CLI::IsMember({"csv", "json", "table"}));
    auto* tol_opt = app.add_option("--tolerance", opt.tolerance, "numeric tolerance");
    app.add_flag("--verify,!--no-verify", opt.verify, "oracle cross-check (default on)");

    const char* names[] = {"solve",  "eigenseq", "factorize",    "periodic",
                           "roots",  "pp",       "nonrecursive", "demo"};
    const char* descs[] = {"iterate a recurrence and print its terms",
                           "generate an eigensequence from seed values",
                           "compute a semiconjugate factorization and verify it",
                           "search for periodic eigensequences (order 2)",
                           "eigenvalues of a constant-coefficient recurrence",
                           "Poincare-Perron convergence report",
                           "enumerate branches of a nonrecursive equation",
                           "run a built-in worked example"};
    for (std::size_t i = 0; i < 8; ++i) {
        auto* sub = app.add_subcommand(names[i], descs[i]);
        sub->fallthrough();
        if (std::string(names[i]) == "demo")
            sub->add_option("name", demo_name, "demo name")->required();
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool format_set = format_opt->count() > 0;
    bool tol_set = tol_opt->count() > 0;
    try {
        if (app.got_subcommand("demo")) return cmd_demo(demo_name, out);
        Json problem = load_problem(opt);
        if (app.got_subcommand("solve")) return cmd_solve(opt, problem, format_set, out);
        if (app.got_subcommand("eigenseq")) return cmd_eigenseq(opt, problem, format_set, out);
        if (app.got_subcommand("factorize")) return cmd_factorize(opt, problem, format_set, out);
        if (app.got_subcommand("periodic")) return cmd_periodic(opt, problem, format_set, out);
        if (app.got_subcommand("roots")) return cmd_roots(opt, problem, format_set, out);
        if (app.got_subcommand("pp")) return cmd_pp(opt, problem, format_set, tol_set, out);
        if (app.got_subcommand("nonrecursive"))
            return cmd_nonrecursive(opt, problem, format_set, out);
        throw ValidationError("no command given");
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TypeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace scfact
